use std::cmp::Ordering;

use serde_json::{json, Value};
use shelfbraid::engine::{compare, fingerprint, handle_reduce, reverse_to_neg_pos, reverse_to_pos_neg, sigma_classify};
use shelfbraid::extended::{eb_distance, eb_equal, eb_mul, eb_shelf};
use shelfbraid::laver::{build_cyclic, cache_dir, load_or_build, LaverTable};
use shelfbraid::quotient::{burau_of, burau_shelf_op, perm_of, perm_shelf_op, BurauMatrix, LaurentPoly, Perm};
use shelfbraid::shelf::{act_partial, in_bn, left_divide, opposite_op, shelf_op, Action};
use shelfbraid::special::{
    complexity, decompose, eval_term, is_special, laver_conjecture_probe, simple_decomposition, synthesize_term,
};
use shelfbraid::{Braid, BraidWord, ColorSeq, Error, ExtBraid, Result, Shelf, Term};

use crate::report::Report;
use crate::{BraidCmd, BurauCmd, Caps, EbCmd, LaverCmd, Outcome, PermCmd, ShelfCmd, SpecialCmd};

/// Tables at least this large go through the on-disk cache.
const CACHED_FROM: u32 = 12;

fn word_arg(s: &str) -> Result<BraidWord> {
    s.parse()
}

fn braid_arg(s: &str) -> Result<Braid> {
    Ok(Braid::new(word_arg(s)?))
}

fn word_value(b: &Braid) -> Value {
    Value::String(b.word().to_string())
}

fn colors(s: &str) -> Result<ColorSeq> {
    match s.trim().parse::<usize>() {
        Ok(n) => Ok(ColorSeq::ones(n)),
        Err(_) => s.parse(),
    }
}

fn colors_value(seq: &ColorSeq) -> Value {
    seq.colors().iter().map(word_value).collect()
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

fn yes_no(op: &str, inputs: &[&str], holds: bool, yes: &str, no: &str) -> Report {
    let report = Report::new(op, inputs, Value::Bool(holds), if holds { yes } else { no });
    if holds {
        report
    } else {
        report.negative()
    }
}

pub fn braid(cmd: BraidCmd, caps: Caps) -> Outcome {
    match cmd {
        BraidCmd::Equal(p) => {
            let holds = braid_arg(&p.first)?.try_eq(&braid_arg(&p.second)?)?;
            Ok(yes_no("braid equal", &[&p.first, &p.second], holds, "equal", "not equal"))
        }
        BraidCmd::Classify(w) => {
            let class = sigma_classify(&word_arg(&w.word)?, caps.step)?;
            Ok(Report::new("braid classify", &[&w.word], json!(class.to_string()), class.to_string()))
        }
        BraidCmd::Compare(p) => {
            let order = compare(&word_arg(&p.first)?, &word_arg(&p.second)?, caps.step)?;
            let name = ordering_name(order);
            Ok(Report::new("braid compare", &[&p.first, &p.second], json!(name), name))
        }
        BraidCmd::Reduce(w) => {
            let reduced = handle_reduce(&word_arg(&w.word)?, caps.step)?.to_string();
            Ok(Report::new("braid reduce", &[&w.word], json!(reduced), reduced))
        }
        BraidCmd::Reverse { word: text, left } => {
            let input = word_arg(&text)?;
            if left {
                let (n, p) = reverse_to_neg_pos(&input)?;
                let result = json!({"negative": n.to_string(), "positive": p.to_string()});
                Ok(Report::new("braid reverse", &[&text], result, format!("negative: {n}\npositive: {p}")))
            } else {
                let (u, v) = reverse_to_pos_neg(&input)?;
                let result = json!({"positive": u.to_string(), "negative": v.to_string()});
                Ok(Report::new("braid reverse", &[&text], result, format!("positive: {u}\nnegative: {v}")))
            }
        }
        BraidCmd::Fingerprint(w) => {
            let fp = fingerprint(&word_arg(&w.word)?)?;
            let images: Vec<String> = fp.images().iter().map(|i| i.to_string()).collect();
            let text = if fp.is_identity() { "identity".to_string() } else { fp.to_string() };
            Ok(Report::new("braid fingerprint", &[&w.word], json!(images), text))
        }
    }
}

pub fn shelf(cmd: ShelfCmd) -> Outcome {
    match cmd {
        ShelfCmd::Op(p) => {
            let value = shelf_op(&braid_arg(&p.first)?, &braid_arg(&p.second)?);
            Ok(Report::new("shelf op", &[&p.first, &p.second], word_value(&value), value.word().to_string()))
        }
        ShelfCmd::Opposite(p) => {
            let value = opposite_op(&braid_arg(&p.first)?, &braid_arg(&p.second)?);
            Ok(Report::new("shelf opposite", &[&p.first, &p.second], word_value(&value), value.word().to_string()))
        }
        ShelfCmd::Power { word: text, m, left } => {
            if m == 0 {
                return Err(Error::Syntax("powers start at 1".into()));
            }
            let b = braid_arg(&text)?;
            let value = if left { b.left_power(m) } else { b.right_power(m) };
            let m_text = m.to_string();
            Ok(Report::new("shelf power", &[&text, &m_text], word_value(&value), value.word().to_string()))
        }
        ShelfCmd::Divide(p) => {
            let inputs = [p.first.as_str(), p.second.as_str()];
            match left_divide(&braid_arg(&p.first)?, &braid_arg(&p.second)?)? {
                Some(x) => Ok(Report::new("shelf divide", &inputs, word_value(&x), x.word().to_string())),
                None => Ok(Report::new("shelf divide", &inputs, Value::Null, "not divisible").negative()),
            }
        }
        ShelfCmd::Member { word: text, n } => {
            let holds = in_bn(&braid_arg(&text)?, n)?;
            let n_text = n.to_string();
            Ok(yes_no("shelf member", &[&text, &n_text], holds, &format!("in B_{n}"), &format!("not in B_{n}")))
        }
        ShelfCmd::Act { colors: seq, word: text } => {
            let inputs = [seq.as_str(), text.as_str()];
            match act_partial(&colors(&seq)?, &word_arg(&text)?)? {
                Action::Defined(out) => Ok(Report::new("shelf act", &inputs, colors_value(&out), out.to_string())),
                Action::Undefined(k) => Ok(Report::new("shelf act", &inputs, Value::Null, format!("undefined at letter {k}"))
                    .cert("failed_letter", k)
                    .negative()),
            }
        }
    }
}

pub fn special(cmd: SpecialCmd, caps: Caps) -> Outcome {
    match cmd {
        SpecialCmd::Check(w) => match is_special(&word_arg(&w.word)?)? {
            Some(value) => {
                let term = synthesize_term(&value, caps.size)?;
                Ok(Report::new("special check", &[&w.word], word_value(&value), format!("special: {}", value.word()))
                    .cert("term", term.to_string()))
            }
            None => Ok(Report::new("special check", &[&w.word], Value::Null, "not special").negative()),
        },
        SpecialCmd::Decompose { word: text, n } => {
            let dec = decompose(&word_arg(&text)?, n)?;
            let (neg, pos) = (ColorSeq::new(dec.negative.clone()), ColorSeq::new(dec.positive.clone()));
            let result = json!({"negative": colors_value(&neg), "positive": colors_value(&pos)});
            Ok(Report::new("special decompose", &[&text], result, format!("negative: {neg}\npositive: {pos}")))
        }
        SpecialCmd::Term { term } => {
            let t: Term = term.parse()?;
            let value = eval_term(&t);
            Ok(Report::new("special term", &[&term], word_value(&value), value.word().to_string())
                .cert("size", t.size())
                .cert("depth", t.depth()))
        }
        SpecialCmd::Complexity { word: text, depth_cap } => match is_special(&word_arg(&text)?)? {
            Some(value) => {
                let c = complexity(&value, depth_cap)?;
                Ok(Report::new("special complexity", &[&text], json!(c), c.to_string()))
            }
            None => Ok(Report::new("special complexity", &[&text], Value::Null, "not special").negative()),
        },
        SpecialCmd::Simple(w) => match simple_decomposition(&word_arg(&w.word)?)? {
            Some(ms) => {
                let listed: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
                Ok(Report::new("special simple", &[&w.word], json!(ms), format!("simple: {}", listed.join(" "))))
            }
            None => Ok(Report::new("special simple", &[&w.word], Value::Null, "not simple").negative()),
        },
        SpecialCmd::ProbeLaver { colors: seq, max_len } => {
            let report = laver_conjecture_probe(&colors(&seq)?, max_len)?;
            let minimum = report.defined_braids.iter().find(|w| !w.is_empty()).map(|w| w.to_string());
            let len_text = max_len.to_string();
            let text = format!(
                "words: {}\ndefined: {}\ndistinct braids: {}\nleast nontrivial: {}\nall positive words defined: {}",
                report.words_enumerated,
                report.words_defined,
                report.defined_braids.len(),
                minimum.as_deref().unwrap_or("none"),
                report.all_positive_defined
            );
            let result = json!({
                "words_enumerated": report.words_enumerated,
                "words_defined": report.words_defined,
                "defined_braids": report.defined_braids.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "all_positive_defined": report.all_positive_defined,
            });
            Ok(Report::new("special probe-laver", &[&seq, &len_text], result, text))
        }
    }
}

fn perm_arg(s: &str) -> Result<Perm> {
    s.parse()
}

pub fn perm(cmd: PermCmd) -> Outcome {
    match cmd {
        PermCmd::Op { f, g } => {
            let value = perm_shelf_op(&perm_arg(&f)?, &perm_arg(&g)?);
            Ok(Report::new("perm op", &[&f, &g], json!(value.to_string()), value.to_string()))
        }
        PermCmd::Of(w) => {
            let value = perm_of(&word_arg(&w.word)?);
            Ok(Report::new("perm of", &[&w.word], json!(value.to_string()), value.to_string())
                .cert("class", value.class()))
        }
        PermCmd::Class { f } => {
            let c = perm_arg(&f)?.class();
            Ok(Report::new("perm class", &[&f], json!(c), c.to_string()))
        }
        PermCmd::Table { perms } => {
            let parsed = perms.iter().map(|p| perm_arg(p)).collect::<Result<Vec<_>>>()?;
            let rows: Vec<Vec<String>> =
                parsed.iter().map(|f| parsed.iter().map(|g| perm_shelf_op(f, g).to_string()).collect()).collect();
            let text = rows.iter().map(|r| r.join("\t")).collect::<Vec<_>>().join("\n");
            let inputs: Vec<&str> = perms.iter().map(String::as_str).collect();
            Ok(Report::new("perm table", &inputs, json!(rows), text))
        }
    }
}

/// A matrix argument: JSON rows of polynomial strings, or a braid word.
fn matrix_arg(s: &str) -> Result<BurauMatrix> {
    if !s.trim_start().starts_with('[') {
        return Ok(burau_of(&word_arg(s)?));
    }
    let rows: Vec<Vec<String>> = serde_json::from_str(s).map_err(|e| Error::Syntax(format!("matrix: {e}")))?;
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|p| p.parse::<LaurentPoly>()).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    BurauMatrix::from_rows(rows)
}

fn matrix_value(m: &BurauMatrix) -> Value {
    m.rows(m.size()).iter().map(|r| r.iter().map(|p| p.to_string()).collect::<Vec<_>>()).collect()
}

pub fn burau(cmd: BurauCmd) -> Outcome {
    match cmd {
        BurauCmd::Of(w) => {
            let m = burau_of(&word_arg(&w.word)?);
            Ok(Report::new("burau of", &[&w.word], matrix_value(&m), m.to_string()))
        }
        BurauCmd::Op { a, b } => {
            let m = burau_shelf_op(&matrix_arg(&a)?, &matrix_arg(&b)?);
            Ok(Report::new("burau op", &[&a, &b], matrix_value(&m), m.to_string()))
        }
        BurauCmd::Det { a } => {
            let d = matrix_arg(&a)?.determinant();
            Ok(Report::new("burau det", &[&a], json!(d.to_string()), d.to_string()))
        }
        BurauCmd::Shtr { a } => {
            let s = matrix_arg(&a)?.shtr();
            Ok(Report::new("burau shtr", &[&a], json!(s.to_string()), s.to_string()))
        }
    }
}

fn laver_table(n: u32, cyclic: bool) -> Result<LaverTable> {
    if cyclic {
        if n == 0 {
            return Err(Error::Syntax("cyclic tables have at least one element".into()));
        }
        return Ok(build_cyclic(n));
    }
    if n >= 31 {
        return Err(Error::Syntax(format!("A_{n} is out of range")));
    }
    if n >= CACHED_FROM {
        return load_or_build(n, &cache_dir()).map_err(|e| Error::Syntax(format!("table cache: {e}")));
    }
    Ok(LaverTable::laver(n))
}

fn table_value(t: &LaverTable) -> Value {
    (1..=t.size()).map(|x| t.row(x)).collect::<Vec<_>>().into()
}

pub fn laver(cmd: LaverCmd) -> Outcome {
    match cmd {
        LaverCmd::Table { n, cyclic } => {
            let t = laver_table(n, cyclic)?;
            let csv = t.to_csv();
            Ok(Report::new("laver table", &[&n.to_string()], table_value(&t), csv.trim_end()))
        }
        LaverCmd::Period { n, x } => {
            let t = laver_table(n, false)?;
            if x == 0 || x > t.size() {
                return Err(Error::Syntax(format!("row {x} is outside A_{n}")));
            }
            let p = t.row_period(x);
            Ok(Report::new("laver period", &[&n.to_string(), &x.to_string()], json!(p), p.to_string()))
        }
        LaverCmd::Project { n } => {
            if n == 0 {
                return Err(Error::Syntax("A_0 has no projection".into()));
            }
            let t = laver_table(n, false)?;
            let projected = t.project().expect("A_n for n ≥ 1 has even size");
            let matches = projected == laver_table(n - 1, false)?;
            Ok(Report::new("laver project", &[&n.to_string()], table_value(&projected), projected.to_csv().trim_end())
                .cert(&format!("equals_A{}", n - 1), matches))
        }
        LaverCmd::Check { n, cyclic } => {
            let holds = laver_table(n, cyclic)?.is_left_shelf();
            Ok(yes_no("laver check", &[&n.to_string()], holds, "left shelf", "not a left shelf"))
        }
    }
}

fn ext(s: &str) -> Result<ExtBraid> {
    s.parse()
}

pub fn eb(cmd: EbCmd) -> Outcome {
    match cmd {
        EbCmd::Mul(p) => {
            let v = eb_mul(&ext(&p.first)?, &ext(&p.second)?);
            Ok(Report::new("eb mul", &[&p.first, &p.second], json!(v.to_string()), v.to_string()))
        }
        EbCmd::Op(p) => {
            let v = eb_shelf(&ext(&p.first)?, &ext(&p.second)?);
            Ok(Report::new("eb op", &[&p.first, &p.second], json!(v.to_string()), v.to_string()))
        }
        EbCmd::Equal(p) => {
            let holds = eb_equal(&ext(&p.first)?, &ext(&p.second)?)?;
            Ok(yes_no("eb equal", &[&p.first, &p.second], holds, "equal", "not equal"))
        }
        EbCmd::Distance(p) => {
            let d = eb_distance(&ext(&p.first)?, &ext(&p.second)?)?;
            Ok(Report::new("eb distance", &[&p.first, &p.second], json!(d.to_string()), d.to_string()))
        }
    }
}
