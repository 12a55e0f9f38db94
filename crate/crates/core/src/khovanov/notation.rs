//! Text form of Khovanov tables: `a_{j}^{i}` means multiplicity `a` in
//! homological degree `i` and `q`-degree `j`. The ranks line lists free
//! summands, the torsion line `ℤ/2` summands; other orders are written
//! `a_{j}^{i}/k`.

use num_bigint::BigInt;

use super::{BigradedGroups, Group};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KhText {
    pub ranks: String,
    pub torsion: String,
}

impl std::fmt::Display for KhText {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", self.ranks)?;
        writeln!(f, "{}", self.torsion)
    }
}

pub fn format_kh(g: &BigradedGroups) -> KhText {
    let mut ranks = Vec::new();
    let mut torsion = Vec::new();
    for (&(i, j), gr) in &g.groups {
        if gr.rank > 0 {
            ranks.push(format!("{}_{{{j}}}^{{{i}}}", gr.rank));
        }
        let mut orders: Vec<&BigInt> = gr.torsion.iter().collect();
        orders.dedup();
        for t in orders {
            let count = gr.torsion.iter().filter(|x| *x == t).count();
            if *t == BigInt::from(2) {
                torsion.push(format!("{count}_{{{j}}}^{{{i}}}"));
            } else {
                torsion.push(format!("{count}_{{{j}}}^{{{i}}}/{t}"));
            }
        }
    }
    KhText { ranks: ranks.join(" "), torsion: torsion.join(" ") }
}

fn parse_term(tok: &str, offset: usize) -> Result<(u64, i32, i32, BigInt)> {
    let bad = |msg: &str| Error::Parse { pos: offset, msg: format!("'{tok}': {msg}") };
    let (body, order) = match tok.split_once('/') {
        Some((b, o)) => (b, o.parse::<BigInt>().map_err(|_| bad("bad torsion order"))?),
        None => (tok, BigInt::from(2)),
    };
    let (a, rest) = body.split_once("_{").ok_or_else(|| bad("expected '_{'"))?;
    let (j, rest) = rest.split_once("}^{").ok_or_else(|| bad("expected '}^{'"))?;
    let i = rest.strip_suffix('}').ok_or_else(|| bad("expected closing '}'"))?;
    let a: u64 = a.parse().map_err(|_| bad("bad multiplicity"))?;
    let j: i32 = j.parse().map_err(|_| bad("bad q-degree"))?;
    let i: i32 = i.parse().map_err(|_| bad("bad homological degree"))?;
    if a == 0 {
        return Err(bad("zero multiplicity"));
    }
    Ok((a, i, j, order))
}

fn terms(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |t| (t.as_ptr() as usize - line.as_ptr() as usize, t))
}

/// Inverse of [`format_kh`].
pub fn parse_kh(ranks: &str, torsion: &str) -> Result<BigradedGroups> {
    let mut g = BigradedGroups::default();
    for (off, tok) in terms(ranks) {
        let (a, i, j, _) = parse_term(tok, off)?;
        let e = g.groups.entry((i, j)).or_insert_with(Group::default);
        if e.rank > 0 {
            return Err(Error::Parse { pos: off, msg: format!("duplicate bidegree ({i},{j})") });
        }
        e.rank = a;
    }
    for (off, tok) in terms(torsion) {
        let (a, i, j, order) = parse_term(tok, off)?;
        let e = g.groups.entry((i, j)).or_insert_with(Group::default);
        e.torsion.extend(std::iter::repeat_n(order, a as usize));
        e.torsion.sort();
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_text() {
        let mut g = BigradedGroups::default();
        g.insert(0, -1, Group { rank: 1, torsion: vec![] });
        g.insert(0, 1, Group { rank: 1, torsion: vec![] });
        let t = format_kh(&g);
        assert_eq!(t.ranks, "1_{-1}^{0} 1_{1}^{0}");
        assert_eq!(t.torsion, "");
        assert_eq!(parse_kh(&t.ranks, &t.torsion).unwrap(), g);
    }

    #[test]
    fn torsion_round_trip() {
        let g = parse_kh("2_{-1}^{0} 1_{3}^{1}", "2_{-1}^{0} 1_{5}^{2}/3").unwrap();
        assert_eq!(g.get(0, -1), Group { rank: 2, torsion: vec![BigInt::from(2), BigInt::from(2)] });
        assert_eq!(g.get(2, 5).torsion, vec![BigInt::from(3)]);
        let t = format_kh(&g);
        assert_eq!(parse_kh(&t.ranks, &t.torsion).unwrap(), g);
    }

    #[test]
    fn malformed() {
        assert!(parse_kh("1_{2}", "").is_err());
        assert!(parse_kh("x_{2}^{1}", "").is_err());
        assert!(parse_kh("0_{2}^{1}", "").is_err());
        assert!(parse_kh("1_{2}^{1} 1_{2}^{1}", "").is_err());
    }
}
