//! Closing a tangle up into a knot or link diagram.

use std::collections::HashMap;
use std::fmt;

use super::{Endpoint, Port, Tangle};
use crate::diagram::{PlanarDiagram, UnionFind};
use crate::error::{Error, Result};

/// How the cables of a tangle are joined outside its disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Closure {
    /// NW to NE and SW to SE, nested along each side.
    Numerator,
    /// NW to SW and NE to SE, nested along each side.
    Denominator,
    /// Crossingless arcs joining boundary points pairwise.
    Joins(Vec<(Port, Port)>),
    /// A named outside diagram: crossings over its own labels, with the label
    /// meeting each boundary point.
    Outer { name: String, crossings: Vec<[u32; 4]>, ports: Vec<(Port, u32)> },
}

/// Result of closing a tangle. The first `tangle_crossings` crossings of
/// `diagram` come from the tangle, in its order.
#[derive(Debug, Clone)]
pub struct Closed {
    pub diagram: PlanarDiagram,
    pub tangle_crossings: usize,
}

impl Closed {
    pub fn is_knot(&self) -> bool {
        self.diagram.is_knot()
    }

    pub fn region(&self) -> Vec<usize> {
        (0..self.tangle_crossings).collect()
    }
}

fn nested(a: &[Port], b: &[Port]) -> Vec<(Port, Port)> {
    a.iter().zip(b.iter().rev()).map(|(&p, &q)| (p, q)).collect()
}

fn cable_ports(t: &Tangle, e: Endpoint) -> Vec<Port> {
    (0..t.cable_at(e).len()).map(|i| (e, i)).collect()
}

impl Closure {
    pub fn numerator() -> Closure {
        Closure::Numerator
    }

    /// Closure through a 2-2 tangle `o` placed east of the tangle: the
    /// numerator of the horizontal sum.
    pub fn through(name: &str, o: &Tangle) -> Closure {
        use Endpoint::*;
        let ports = vec![
            ((NE, 0), o.port_label((NW, 0))),
            ((SE, 0), o.port_label((SW, 0))),
            ((NW, 0), o.port_label((NE, 0))),
            ((SW, 0), o.port_label((SE, 0))),
        ];
        Closure::Outer { name: name.to_string(), crossings: o.crossings().to_vec(), ports }
    }

    pub fn name(&self) -> String {
        match self {
            Closure::Numerator => "numerator".into(),
            Closure::Denominator => "denominator".into(),
            Closure::Joins(_) => "joins".into(),
            Closure::Outer { name, .. } => name.clone(),
        }
    }

    /// `numerator`, `denominator`, a built-in name such as `kt-context`, or joins
    /// like `NW0-NE0 SW0-SE0`.
    pub fn parse(text: &str) -> Result<Closure> {
        let t = text.trim();
        match t {
            "numerator" | "N" => return Ok(Closure::Numerator),
            "denominator" | "D" => return Ok(Closure::Denominator),
            _ => {}
        }
        if let Some(c) = super::data::builtin_closure(t)? {
            return Ok(c);
        }
        let port = |s: &str, pos: usize| -> Result<Port> {
            let split = s.find(|c: char| c.is_ascii_digit()).ok_or(Error::Parse { pos, msg: format!("bad port '{s}'") })?;
            let e: Endpoint = s[..split].parse()?;
            let i: usize = s[split..].parse().map_err(|_| Error::Parse { pos, msg: format!("bad port '{s}'") })?;
            Ok((e, i))
        };
        let mut joins = Vec::new();
        let mut pos = 0;
        for tok in t.split_whitespace() {
            let (a, b) = tok.split_once('-').ok_or(Error::Parse { pos, msg: format!("expected PORT-PORT, got '{tok}'") })?;
            joins.push((port(a, pos)?, port(b, pos)?));
            pos += tok.len() + 1;
        }
        if joins.is_empty() {
            return Err(Error::Parse { pos: 0, msg: format!("unknown closure '{t}'") });
        }
        Ok(Closure::Joins(joins))
    }

    /// The outside diagram for a given tangle: crossings and the label at
    /// every boundary point, with labels starting above `base`.
    fn outer(&self, t: &Tangle, base: u32) -> (Vec<[u32; 4]>, Vec<(Port, u32)>) {
        use Endpoint::*;
        let joins = match self {
            Closure::Numerator => {
                let mut j = nested(&cable_ports(t, NW), &cable_ports(t, NE));
                j.extend(nested(&cable_ports(t, SW), &cable_ports(t, SE)));
                j
            }
            Closure::Denominator => {
                let mut j = nested(&cable_ports(t, NW), &cable_ports(t, SW));
                j.extend(nested(&cable_ports(t, SE), &cable_ports(t, NE)));
                j
            }
            Closure::Joins(j) => j.clone(),
            Closure::Outer { crossings, ports, .. } => {
                let xs = crossings.iter().map(|x| x.map(|l| l + base)).collect();
                let ps = ports.iter().map(|&(p, l)| (p, l + base)).collect();
                return (xs, ps);
            }
        };
        let mut ports = Vec::new();
        for (k, (p, q)) in joins.into_iter().enumerate() {
            let l = base + 1 + k as u32;
            ports.push((p, l));
            ports.push((q, l));
        }
        (Vec::new(), ports)
    }
}

impl fmt::Display for Closure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Closure::Joins(j) => {
                let parts: Vec<String> = j.iter().map(|((a, i), (b, k))| format!("{a}{i}-{b}{k}")).collect();
                f.write_str(&parts.join(" "))
            }
            other => f.write_str(&other.name()),
        }
    }
}

/// Joins the tangle's boundary to the closure. Links are returned too; use
/// [`close_knot`] to insist on one component.
pub fn close(t: &Tangle, closure: &Closure) -> Result<Closed> {
    let base = t.max_label();
    let (outer, ports) = closure.outer(t, base);
    let mut seen: HashMap<Port, usize> = HashMap::new();
    for &(p, _) in &ports {
        if p.1 >= t.cable_at(p.0).len() {
            return Err(Error::Tangle(format!("closure uses {}{} which the tangle lacks", p.0, p.1)));
        }
        *seen.entry(p).or_default() += 1;
    }
    if let Some(p) = t.ports().into_iter().find(|p| seen.get(p) != Some(&1)) {
        return Err(Error::Tangle(format!("closure must meet {}{} exactly once", p.0, p.1)));
    }
    let max = outer.iter().flatten().chain(ports.iter().map(|(_, l)| l)).copied().max().unwrap_or(base).max(base);
    let mut uf = UnionFind::new(max as usize + 1);
    for &(p, l) in &ports {
        uf.union(t.port_label(p) as usize, l as usize);
    }
    let mut crossings: Vec<[u32; 4]> = t.crossings().to_vec();
    crossings.extend(outer);
    let mut used: HashMap<usize, usize> = HashMap::new();
    for x in &mut crossings {
        for l in x.iter_mut() {
            *l = uf.find(*l as usize) as u32;
            *used.entry(*l as usize).or_default() += 1;
        }
    }
    // classes that meet no crossing are crossingless circles
    let mut classes: HashMap<usize, ()> = HashMap::new();
    for &(p, l) in &ports {
        classes.insert(uf.find(l as usize), ());
        classes.insert(uf.find(t.port_label(p) as usize), ());
    }
    let free = classes.keys().filter(|c| !used.contains_key(c)).count() as u32;
    let diagram = if crossings.is_empty() {
        if free == 1 {
            PlanarDiagram::unknot()
        } else {
            PlanarDiagram::new(vec![], free)?
        }
    } else {
        PlanarDiagram::from_unoriented(crossings, free, &[])?.relabeled()
    };
    Ok(Closed { diagram, tangle_crossings: t.n_crossings() })
}

pub fn close_knot(t: &Tangle, closure: &Closure) -> Result<PlanarDiagram> {
    let c = close(t, closure)?;
    if !c.is_knot() {
        return Err(Error::MultiComponent { components: c.diagram.n_components() });
    }
    Ok(c.diagram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::jones;

    #[test]
    fn numerator_of_zero_is_unknot() {
        let d = close_knot(&Tangle::zero(), &Closure::Numerator).unwrap();
        assert!(jones(&d).unwrap().is_one());
        let c = close(&Tangle::zero(), &Closure::Denominator).unwrap();
        assert_eq!(c.diagram.n_components(), 2);
        assert!(!c.is_knot());
    }

    #[test]
    fn twists_close_to_torus_knots() {
        let trefoil = close_knot(&Tangle::horizontal_twists(3), &Closure::Numerator).unwrap();
        assert_eq!(trefoil.n_crossings(), 3);
        assert_eq!(trefoil.writhe().abs(), 3);
        assert!(close_knot(&Tangle::horizontal_twists(2), &Closure::Numerator).is_err());
        // denominator of a horizontal twist row is the unknot
        let u = close_knot(&Tangle::horizontal_twists(3), &Closure::Denominator).unwrap();
        assert!(jones(&u).unwrap().is_one());
    }

    #[test]
    fn explicit_joins() {
        let c = Closure::parse("NW0-NE0 SW0-SE0").unwrap();
        assert_eq!(c.to_string(), "NW0-NE0 SW0-SE0");
        let a = close_knot(&Tangle::horizontal_twists(3), &c).unwrap();
        let b = close_knot(&Tangle::horizontal_twists(3), &Closure::Numerator).unwrap();
        assert_eq!(jones(&a).unwrap(), jones(&b).unwrap());
        assert!(Closure::parse("NW0-NE0 SW0").is_err());
        assert!(close(&Tangle::zero(), &Closure::parse("NW0-NE0").unwrap()).is_err());
    }

    #[test]
    fn through_a_second_tangle() {
        // 3 + 2 twists in a row: the (2,5) torus knot
        let c = Closure::through("two", &Tangle::horizontal_twists(2));
        let d = close_knot(&Tangle::horizontal_twists(3), &c).unwrap();
        assert_eq!(d.n_crossings(), 5);
    }
}
