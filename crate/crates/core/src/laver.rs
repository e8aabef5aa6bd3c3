//! Laver tables and their cyclic generalisation to arbitrary sizes.
//!
//! Row `x` of the table on `{1, …, N}` is `x ▷ 1 = x + 1`,
//! `x ▷ (y + 1) = (x ▷ y) ▷ (x + 1)`, computed from row `N` (the identity)
//! downwards. Along a row the values increase strictly until they reach `N`
//! and then start over, so each row is stored as one period.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use log::{debug, info};

/// Environment variable naming the table cache directory.
pub const CACHE_ENV: &str = "SHELFBRAID_CACHE";

const MAGIC: &[u8; 4] = b"LAVR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaverTable {
    size: u32,
    /// `rows[x - 1]` holds `x ▷ 1, …, x ▷ p` for the least period `p | N`,
    /// or the whole row when no such period exists.
    rows: Vec<Box<[u32]>>,
}

/// Least `p` dividing `row.len()` such that `row` repeats with period `p`.
fn least_period(row: &[u32]) -> usize {
    let n = row.len();
    (1..=n)
        .filter(|p| n % p == 0)
        .find(|&p| (p..n).all(|k| row[k] == row[k - p]))
        .unwrap_or(n)
}

/// Reduces `x` into `1..=m`.
pub fn project_element(x: u32, m: u32) -> u32 {
    (x - 1) % m + 1
}

/// The unique table on `{1, …, N}` with `x ▷ 1 = x + 1 (mod N)` obeying
/// `x ▷ (y ▷ 1) = (x ▷ y) ▷ (x ▷ 1)`.
pub fn build_cyclic(size: u32) -> LaverTable {
    assert!(size >= 1, "tables have at least one element");
    let n = size as usize;
    let mut rows: Vec<Box<[u32]>> = vec![Box::default(); n];
    rows[n - 1] = (1..=size).collect();
    for x in (1..size).rev() {
        let mut cycle = Vec::new();
        let mut v = x + 1;
        loop {
            cycle.push(v);
            if v == size {
                break;
            }
            let row = &rows[v as usize - 1];
            v = row[x as usize % row.len()];
        }
        if n % cycle.len() != 0 {
            let p = cycle.len();
            cycle = (0..n).map(|k| cycle[k % p]).collect();
        }
        rows[x as usize - 1] = cycle.into_boxed_slice();
    }
    LaverTable { size, rows }
}

impl LaverTable {
    /// The Laver table `A_n` on `2^n` elements.
    pub fn laver(n: u32) -> LaverTable {
        assert!(n < 32, "table exponent out of range");
        build_cyclic(1 << n)
    }

    /// Builds a table from dense rows, `rows[x-1][y-1] = x ▷ y`.
    pub fn from_dense(rows: Vec<Vec<u32>>) -> Option<LaverTable> {
        let size = rows.len() as u32;
        if size == 0 || rows.iter().any(|r| r.len() != rows.len() || r.iter().any(|&v| v == 0 || v > size)) {
            return None;
        }
        let rows = rows
            .into_iter()
            .map(|r| {
                let p = least_period(&r);
                r[..p].to_vec().into_boxed_slice()
            })
            .collect();
        Some(LaverTable { size, rows })
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// `x ▷ y`.
    pub fn get(&self, x: u32, y: u32) -> u32 {
        assert!((1..=self.size).contains(&x) && (1..=self.size).contains(&y), "({x}, {y}) outside the table");
        let row = &self.rows[x as usize - 1];
        row[(y as usize - 1) % row.len()]
    }

    pub fn row(&self, x: u32) -> Vec<u32> {
        (1..=self.size).map(|y| self.get(x, y)).collect()
    }

    pub fn row_period(&self, x: u32) -> u32 {
        self.rows[x as usize - 1].len() as u32
    }

    /// Exhaustive check of `x ▷ (y ▷ z) = (x ▷ y) ▷ (x ▷ z)`.
    pub fn is_left_shelf(&self) -> bool {
        let n = self.size;
        (1..=n).all(|x| {
            (1..=n).all(|y| {
                let xy = self.get(x, y);
                (1..=n).all(|z| self.get(x, self.get(y, z)) == self.get(xy, self.get(x, z)))
            })
        })
    }

    /// Reduction of `A_{n+1}` modulo `2^n`.
    pub fn project(&self) -> Option<LaverTable> {
        if self.size < 2 || self.size % 2 != 0 {
            return None;
        }
        let m = self.size / 2;
        let rows = (1..=m).map(|x| (1..=m).map(|y| project_element(self.get(x, y), m)).collect()).collect();
        LaverTable::from_dense(rows)
    }

    /// `(x^{[m]}, x_{[m]})`.
    pub fn powers(&self, x: u32, m: u32) -> (u32, u32) {
        assert!(m >= 1, "powers start at 1");
        let (mut right, mut left) = (x, x);
        for _ in 1..m {
            right = self.get(x, right);
            left = self.get(left, x);
        }
        (right, left)
    }

    /// One comma-separated row per line.
    pub fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        for x in 1..=self.size {
            let cells: Vec<String> = self.row(x).iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    fn write_binary(&self, out: &mut impl Write) -> io::Result<()> {
        out.write_all(MAGIC)?;
        out.write_all(&self.size.to_le_bytes())?;
        for row in &self.rows {
            out.write_all(&(row.len() as u32).to_le_bytes())?;
            for v in row.iter() {
                out.write_all(&v.to_le_bytes())?;
            }
        }
        Ok(())
    }

    fn read_binary(bytes: &[u8]) -> Option<LaverTable> {
        let mut words = bytes.strip_prefix(MAGIC)?.chunks_exact(4).map(|c| u32::from_le_bytes(c.try_into().unwrap()));
        let size = words.next()?;
        let mut rows = Vec::with_capacity(size as usize);
        for _ in 0..size {
            let len = words.next()? as usize;
            if len == 0 || len > size as usize {
                return None;
            }
            let row: Vec<u32> = words.by_ref().take(len).collect();
            if row.len() != len || row.iter().any(|&v| v == 0 || v > size) {
                return None;
            }
            rows.push(row.into_boxed_slice());
        }
        if words.next().is_some() {
            return None;
        }
        Some(LaverTable { size, rows })
    }
}

/// The cache directory: `$SHELFBRAID_CACHE`, or `./.cache`.
pub fn cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(".cache"))
}

fn cache_file(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("laver-{n}.tbl"))
}

/// `A_n`, read from `dir` when present, otherwise built and stored there.
pub fn load_or_build(n: u32, dir: &Path) -> io::Result<LaverTable> {
    let path = cache_file(dir, n);
    if let Ok(mut file) = fs::File::open(&path) {
        let mut bytes = Vec::new();
        file.read_to_end(&mut bytes)?;
        match LaverTable::read_binary(&bytes) {
            Some(table) if table.size() == 1 << n => {
                debug!("loaded A_{n} from {}", path.display());
                return Ok(table);
            }
            _ => info!("ignoring unreadable cache file {}", path.display()),
        }
    }
    let table = LaverTable::laver(n);
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(".laver-{n}.tbl.{}", std::process::id()));
    {
        let mut out = BufWriter::new(fs::File::create(&tmp)?);
        table.write_binary(&mut out)?;
        out.flush()?;
    }
    fs::rename(&tmp, &path)?;
    debug!("stored A_{n} at {}", path.display());
    Ok(table)
}
