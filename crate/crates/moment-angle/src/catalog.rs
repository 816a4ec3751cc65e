//! Named example complexes, addressable from the CLI as `@name`.
//!
//! Parameterized families use colon syntax: `boundary-simplex:3` is `∂Δ³`,
//! `points:4` four disjoint vertices, `skeleton:5:1` the 1-skeleton of the
//! simplex on five vertices, `cycle:6` the hexagon boundary.

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// Resolves a catalog name to its complex.
pub fn get(name: &str) -> Result<SimplicialComplex> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["pentagon"] => cycle(5),
        ["cycle", n] => cycle(parse(n, "cycle size")?),
        ["points", n] => {
            let n = parse(n, "point count")?;
            if n == 0 {
                return Err(Error::input("points:n needs n >= 1"));
            }
            SimplicialComplex::from_facets(n, &[])
        }
        ["simplex", d] => {
            let d = parse(d, "simplex dimension")?;
            SimplicialComplex::from_facets(d + 1, &[(1..=d + 1).collect()])
        }
        ["boundary-simplex", d] => {
            let d = parse(d, "simplex dimension")?;
            if d == 0 {
                return Err(Error::input(
                    "boundary-simplex:d needs d >= 1 (the boundary of a point has no vertices)",
                ));
            }
            let full = SimplicialComplex::from_facets(d + 1, &[(1..=d + 1).collect()])?;
            full.skeleton(d as i32 - 1)
        }
        ["skeleton", n, i] => {
            let n = parse(n, "vertex count")?;
            let i: i32 = i
                .parse()
                .map_err(|_| Error::input(format!("bad skeleton index {i:?}")))?;
            if n == 0 || i < 0 || i > n as i32 - 1 {
                return Err(Error::input(format!(
                    "skeleton:{n}:{i} out of range (need n >= 1, 0 <= i <= n-1)"
                )));
            }
            let full = SimplicialComplex::from_facets(n, &[(1..=n).collect()])?;
            full.skeleton(i)
        }
        _ => Err(Error::input(format!(
            "unknown catalog entry {name:?}; known: pentagon, cycle:n, points:n, simplex:d, \
             boundary-simplex:d, skeleton:n:i"
        ))),
    }
}

fn parse(s: &str, what: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::input(format!("bad {what} {s:?}")))
}

fn cycle(n: u32) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::input("cycle:n needs n >= 3"));
    }
    let mut facets: Vec<Vec<u32>> = (1..n).map(|i| vec![i, i + 1]).collect();
    facets.push(vec![n, 1]);
    SimplicialComplex::from_facets(n, &facets)
}

/// The standard fixture list the test suites iterate over.
pub fn standard() -> Vec<(String, SimplicialComplex)> {
    let names = [
        "pentagon",
        "cycle:4",
        "cycle:6",
        "points:1",
        "points:2",
        "points:3",
        "points:5",
        "simplex:0",
        "simplex:1",
        "simplex:2",
        "simplex:3",
        "simplex:4",
        "boundary-simplex:1",
        "boundary-simplex:2",
        "boundary-simplex:3",
        "boundary-simplex:4",
        "skeleton:4:1",
        "skeleton:5:1",
        "skeleton:5:2",
    ];
    names
        .iter()
        .map(|&n| (n.to_string(), get(n).expect("standard entry")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scx;

    #[test]
    fn entries_resolve() {
        assert_eq!(get("pentagon").unwrap().vertex_count(), 5);
        assert_eq!(get("points:4").unwrap().face_counts(), vec![1, 4]);
        assert_eq!(get("simplex:2").unwrap().dim(), 2);
        assert_eq!(get("boundary-simplex:2").unwrap().face_counts(), vec![1, 3, 3]);
        assert_eq!(get("skeleton:5:1").unwrap().dim(), 1);
        assert_eq!(get("cycle:4").unwrap().face_counts(), vec![1, 4, 4]);
        assert!(get("dodecahedron").is_err());
        assert!(get("cycle:2").is_err());
        assert!(get("boundary-simplex:0").is_err());
        assert!(get("skeleton:3:7").is_err());
    }

    #[test]
    fn standard_round_trips_through_scx() {
        for (name, k) in standard() {
            let text = scx::write_string(&k);
            let back = scx::read_str(&text).unwrap();
            assert_eq!(k, back, "{name}");
            assert_eq!(scx::write_string(&back), text, "{name}");
        }
    }
}
