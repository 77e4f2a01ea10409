//! Built-in groups and the recipe mini-language.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use super::{EnumeratedGroup, GroupError, Perm, PermGroup};
use crate::numth::{gcd, mod_inverse};

/// The oracle catalog: display name and recipe.
pub const CATALOG: &[(&str, &str)] = &[
    ("1", "trivial"),
    ("C2", "cyclic:2"),
    ("C3", "cyclic:3"),
    ("S3", "sym:3"),
    ("C3:C4", "c3xc4"),
    ("D8", "dihedral:8"),
    ("Q8", "q8"),
    ("D14", "dihedral:14"),
    ("C7:C4", "semidirect:cyclic:7;cyclic:4;-1"),
    ("A4", "alt:4"),
    ("SL(2,3)", "sl23"),
    ("S4", "sym:4"),
    ("A5", "alt:5"),
    ("SL(2,5)", "sl25"),
    ("S5", "sym:5"),
    ("C3xC3", "product:cyclic:3,cyclic:3"),
    ("ex288", "ex288"),
];

pub fn catalog() -> Vec<PermGroup> {
    CATALOG
        .iter()
        .map(|(name, recipe)| {
            let mut g = construct(recipe).expect("catalog recipes are valid");
            g.name = name.to_string();
            g
        })
        .collect()
}

/// Parses a recipe such as `sym:4`, `sl25`, `product:cyclic:3,cyclic:3` or
/// `semidirect:cyclic:7;q8;-1,-1`.
pub fn construct(recipe: &str) -> Result<PermGroup, GroupError> {
    let r = recipe.trim();
    let bad = |why: &str| GroupError::Recipe(recipe.to_string(), why.to_string());
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad("expected a positive integer"));
    let mut g = match r.split_once(':') {
        Some(("cyclic", n)) => cyclic(num(n)?)?,
        Some(("dihedral", n)) => dihedral(num(n)?)?,
        Some(("sym", n)) => symmetric(num(n)?)?,
        Some(("alt", n)) => alternating(num(n)?)?,
        Some(("product", rest)) => {
            let (a, b) = rest.split_once(',').ok_or_else(|| bad("product needs two factors"))?;
            direct_product(&construct(a)?, &construct(b)?)?
        }
        Some(("semidirect", rest)) => {
            let parts: Vec<&str> = rest.split(';').collect();
            let [normal, acting, table] = parts[..] else {
                return Err(bad("semidirect needs <normal>;<acting>;<action table>"));
            };
            let n = match normal.trim().split_once(':') {
                Some(("cyclic", n)) => num(n)?,
                _ => match normal.trim().strip_prefix('c') {
                    Some(n) => num(n)?,
                    None => return Err(bad("the normal subgroup must be cyclic")),
                },
            };
            let action = table
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| bad("bad action exponent")))
                .collect::<Result<Vec<_>, _>>()?;
            semidirect_cyclic(n, &construct(acting)?, &action)?
        }
        Some(_) => return Err(bad("unknown constructor")),
        None => match r {
            "trivial" | "1" => cyclic(1)?,
            "q8" => quaternion()?,
            "sl23" => sl2(3)?,
            "sl25" | "2a5" => sl2(5)?,
            "c3xc4" => semidirect_cyclic(3, &cyclic(4)?, &[-1])?,
            "ex288" => ex288()?,
            _ => shorthand(r).ok_or_else(|| bad("unknown group name"))??,
        },
    };
    g.name = r.to_string();
    Ok(g)
}

/// `cN`, `dN`, `sN`, `aN`.
fn shorthand(r: &str) -> Option<Result<PermGroup, GroupError>> {
    if !r.is_char_boundary(1) {
        return None;
    }
    let (head, tail) = r.split_at(1);
    let n: usize = tail.parse().ok()?;
    Some(match head {
        "c" => cyclic(n),
        "d" => dihedral(n),
        "s" => symmetric(n),
        "a" => alternating(n),
        _ => return None,
    })
}

pub fn cyclic(n: usize) -> Result<PermGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::Recipe("cyclic:0".into(), "order must be positive".into()));
    }
    let gens = if n == 1 { vec![] } else { vec![Perm::from_images((1..n as u32).chain([0]).collect())?] };
    PermGroup::new(format!("C{n}"), n, gens)
}

/// Dihedral group of order `n`.
pub fn dihedral(n: usize) -> Result<PermGroup, GroupError> {
    if n < 2 || n % 2 == 1 {
        return Err(GroupError::Recipe(format!("dihedral:{n}"), "order must be even".into()));
    }
    let m = n / 2;
    match m {
        1 => cyclic(2),
        2 => direct_product(&cyclic(2)?, &cyclic(2)?),
        _ => {
            let rot = Perm::from_images((1..m as u32).chain([0]).collect())?;
            let refl = Perm::from_images((0..m as u32).map(|i| (m as u32 - i) % m as u32).collect())?;
            PermGroup::new(format!("D{n}"), m, vec![rot, refl])
        }
    }
}

pub fn symmetric(n: usize) -> Result<PermGroup, GroupError> {
    if n == 0 || n > 7 {
        return Err(GroupError::Recipe(format!("sym:{n}"), "degree must be 1..=7".into()));
    }
    if n == 1 {
        return cyclic(1);
    }
    let t = Perm::from_cycles(n, &[&[0, 1]])?;
    let c = Perm::from_images((1..n as u32).chain([0]).collect())?;
    PermGroup::new(format!("S{n}"), n, if n == 2 { vec![t] } else { vec![t, c] })
}

pub fn alternating(n: usize) -> Result<PermGroup, GroupError> {
    if n == 0 || n > 7 {
        return Err(GroupError::Recipe(format!("alt:{n}"), "degree must be 1..=7".into()));
    }
    if n < 3 {
        return cyclic(1);
    }
    let mut gens = vec![Perm::from_cycles(n, &[&[0, 1, 2]])?];
    if n > 3 {
        let cyc: Vec<u32> = if n % 2 == 1 { (0..n as u32).collect() } else { (1..n as u32).collect() };
        gens.push(Perm::from_cycles(n, &[&cyc])?);
    }
    PermGroup::new(format!("A{n}"), n, gens)
}

pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup, GroupError> {
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(Perm::from_images(
            g.images().iter().copied().chain(da as u32..(da + db) as u32).collect(),
        )?);
    }
    for g in b.generators() {
        gens.push(Perm::from_images(
            (0..da as u32).chain(g.images().iter().map(|&x| x + da as u32)).collect(),
        )?);
    }
    PermGroup::new(format!("{}x{}", a.name, b.name), da + db, gens)
}

/// Right-regular permutation representation of the group generated by
/// `gens` under `mul`.
fn regular_from_closure<T: Clone + Eq + Hash>(
    name: &str,
    identity: T,
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
) -> Result<PermGroup, GroupError> {
    let mut elems = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let y = mul(&elems[i], g);
            if !index.contains_key(&y) {
                if elems.len() >= super::DEFAULT_ENUMERATION_BOUND {
                    return Err(GroupError::TooLarge(super::DEFAULT_ENUMERATION_BOUND));
                }
                index.insert(y.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(y);
            }
        }
    }
    let perms = gens
        .iter()
        .map(|g| Perm::from_images(elems.iter().map(|x| index[&mul(x, g)] as u32).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    PermGroup::new(name, elems.len(), perms)
}

type Mat2 = [i64; 4];

fn mat_mul(a: &Mat2, b: &Mat2, p: i64) -> Mat2 {
    [
        (a[0] * b[0] + a[1] * b[2]).rem_euclid(p),
        (a[0] * b[1] + a[1] * b[3]).rem_euclid(p),
        (a[2] * b[0] + a[3] * b[2]).rem_euclid(p),
        (a[2] * b[1] + a[3] * b[3]).rem_euclid(p),
    ]
}

/// Quaternion group of order 8, realized inside SL(2,3).
pub fn quaternion() -> Result<PermGroup, GroupError> {
    let i = [0, 2, 1, 0];
    let j = [1, 1, 1, 2];
    regular_from_closure("Q8", [1, 0, 0, 1], &[i, j], |a, b| mat_mul(a, b, 3))
}

/// SL(2,p) acting on the nonzero vectors of `F_p²` (row vectors, right action).
pub fn sl2(p: i64) -> Result<PermGroup, GroupError> {
    let vecs: Vec<(i64, i64)> =
        (0..p).flat_map(|a| (0..p).map(move |b| (a, b))).filter(|&v| v != (0, 0)).collect();
    let pos: HashMap<(i64, i64), u32> = vecs.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
    let act = |m: Mat2| {
        Perm::from_images(
            vecs.iter()
                .map(|&(x, y)| pos[&((x * m[0] + y * m[2]).rem_euclid(p), (x * m[1] + y * m[3]).rem_euclid(p))])
                .collect(),
        )
    };
    let gens = vec![act([1, 1, 0, 1])?, act([0, p - 1, 1, 0])?];
    PermGroup::new(format!("SL(2,{p})"), vecs.len(), gens)
}

/// `C_n ⋊ E` where the `s`-th generator of `E` acts on `C_n = ⟨a⟩` by
/// `a ↦ a^{action[s]}` (conjugation `e⁻¹ a e`).
pub fn semidirect_cyclic(n: usize, acting: &PermGroup, action: &[i64]) -> Result<PermGroup, GroupError> {
    let recipe = || format!("semidirect C{n} by {}", acting.name);
    if n == 0 {
        return Err(GroupError::Recipe(recipe(), "order must be positive".into()));
    }
    if action.len() != acting.generators().len() {
        return Err(GroupError::BadAction(format!(
            "{} exponents for {} generators",
            action.len(),
            acting.generators().len()
        )));
    }
    let n64 = n as u64;
    let units: Vec<u64> = action.iter().map(|&k| k.rem_euclid(n as i64) as u64).collect();
    if units.iter().any(|&k| gcd(k, n64) != 1 && n > 1) {
        return Err(GroupError::BadAction("exponent not a unit modulo n".into()));
    }
    let e = acting.enumerate()?;
    // k(e) for every element, checked on every edge of the Cayley graph
    let mut k = vec![None; e.order()];
    k[0] = Some(1 % n64.max(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (s, g) in e.generators().iter().enumerate() {
            let j = e.index_of(&e.element(i).mul(g)).expect("closed");
            let kj = k[i].unwrap() * units[s] % n64.max(1);
            match k[j] {
                None => {
                    k[j] = Some(kj);
                    queue.push_back(j);
                }
                Some(old) if old != kj => {
                    return Err(GroupError::BadAction(format!(
                        "element {:?} would act by both {old} and {kj}",
                        e.element(j)
                    )))
                }
                _ => {}
            }
        }
    }
    let k: Vec<u64> = k.into_iter().map(Option::unwrap).collect();
    let kinv: Vec<u64> = k.iter().map(|&x| mod_inverse(x, n64).unwrap_or(0)).collect();
    let mul = |a: &(u64, usize), b: &(u64, usize)| {
        // a^i e · a^j f = a^{i + j·k(e⁻¹)} ef
        let i = (a.0 + b.0 * kinv[a.1]) % n64;
        (i, e.mul(a.1, b.1))
    };
    let mut gens = vec![(1 % n64, 0usize)];
    for g in e.generators() {
        gens.push((0, e.index_of(g).unwrap()));
    }
    regular_from_closure(&recipe(), (0, 0), &gens, mul)
}

/// The group `(H × H) ⋊ ⟨σ⟩` with `H = C3 ⋊ C4` and `σ` swapping the
/// factors; order 288.
pub fn ex288() -> Result<PermGroup, GroupError> {
    let h = semidirect_cyclic(3, &cyclic(4)?, &[-1])?;
    let d = h.degree();
    let hh = direct_product(&h, &h)?;
    let sigma = Perm::from_images((0..2 * d as u32).map(|i| (i + d as u32) % (2 * d as u32)).collect())?;
    // generators (c,1), (e,1), σ
    let gens = vec![hh.generators()[0].clone(), hh.generators()[1].clone(), sigma];
    PermGroup::new("ex288", 2 * d, gens)
}

/// Indices of `(c, 1)` and `(c, c)` in an enumerated `ex288`, with `c` of
/// order 3.
pub fn ex288_elements(g: &EnumeratedGroup) -> (usize, usize) {
    let gens = g.generators();
    let x1 = gens[0].clone();
    let xx = x1.mul(&gens[2]).mul(&x1).mul(&gens[2]);
    (g.index_of(&x1).unwrap(), g.index_of(&xx).unwrap())
}
