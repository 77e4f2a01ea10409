//! Small permutation groups: enumeration, conjugacy classes, and reality.

mod construct;
mod reality;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

pub use construct::{catalog, construct, ex288_elements, CATALOG};
pub use reality::{ClassReality, ClassRealityReport, Reality};

use crate::numth::prime_factors;

/// Default ceiling on the order of groups we enumerate.
pub const DEFAULT_ENUMERATION_BOUND: usize = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order exceeds the bound {0}")]
    TooLarge(usize),
    #[error("malformed group recipe {0:?}: {1}")]
    Recipe(String, String),
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("action does not define a homomorphism: {0}")]
    BadAction(String),
}

/// A permutation of `0..n`, acting on the right: `x^(ab) = (x^a)^b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u32]>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| GroupError::BadPermutation(format!("{images:?}")))?;
            if *slot {
                return Err(GroupError::BadPermutation(format!("{images:?}")));
            }
            *slot = true;
        }
        Ok(Perm(images.into()))
    }

    /// Builds a permutation of degree `n` from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self, GroupError> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                let b = cyc[(k + 1) % cyc.len()];
                if a as usize >= n || b as usize >= n {
                    return Err(GroupError::BadPermutation(format!("{cycles:?}")));
                }
                img[a as usize] = b;
            }
        }
        Self::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `self` followed by `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv.into())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.0.len()];
        let mut ord = 1u64;
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0u64;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for s in 0..self.0.len() {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = s;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.0[x] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A permutation group given by generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    pub name: String,
    degree: usize,
    gens: Vec<Perm>,
}

impl PermGroup {
    pub fn new(name: impl Into<String>, degree: usize, gens: Vec<Perm>) -> Result<Self, GroupError> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::BadPermutation("generator degree mismatch".into()));
        }
        Ok(PermGroup { name: name.into(), degree, gens })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn enumerate(&self) -> Result<EnumeratedGroup, GroupError> {
        self.enumerate_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn enumerate_bounded(&self, bound: usize) -> Result<EnumeratedGroup, GroupError> {
        EnumeratedGroup::build(self, bound)
    }
}

/// A conjugacy class of an enumerated group.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub name: String,
    /// Index of the representative in [`EnumeratedGroup::elements`].
    pub representative: usize,
    pub size: usize,
    pub element_order: u64,
    pub centralizer_order: usize,
    /// Index of the class containing the inverses.
    pub inverse: usize,
    /// Class of `g^p` for every prime `p` dividing the group order.
    pub power_maps: BTreeMap<u64, usize>,
    pub members: Vec<usize>,
}

impl ConjClass {
    pub fn is_two_regular(&self) -> bool {
        self.element_order % 2 == 1
    }
}

/// The full element list of a group with its conjugacy classes.
pub struct EnumeratedGroup {
    pub name: String,
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    /// BFS tree: `elements[i] = elements[p] * gens[s]` for `parent[i] = Some((p, s))`.
    parent: Vec<Option<(usize, usize)>>,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

impl fmt::Debug for EnumeratedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EnumeratedGroup({}, order {})", self.name, self.order())
    }
}

impl EnumeratedGroup {
    fn build(g: &PermGroup, bound: usize) -> Result<Self, GroupError> {
        let id = Perm::identity(g.degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut parent = vec![None];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (s, gen) in g.gens.iter().enumerate() {
                let y = elements[i].mul(gen);
                if !index.contains_key(&y) {
                    if elements.len() >= bound {
                        return Err(GroupError::TooLarge(bound));
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                    parent.push(Some((i, s)));
                }
            }
        }
        let mut eg = EnumeratedGroup {
            name: g.name.clone(),
            degree: g.degree,
            gens: g.gens.clone(),
            elements,
            index,
            parent,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        eg.compute_classes();
        Ok(eg)
    }

    fn compute_classes(&mut self) {
        let n = self.elements.len();
        let gen_inv: Vec<Perm> = self.gens.iter().map(Perm::inverse).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = raw.len();
            class_of[start] = c;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let x = &self.elements[members[k]];
                for (g, gi) in self.gens.iter().zip(&gen_inv) {
                    let y = gi.mul(x).mul(g);
                    let j = self.index[&y];
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        members.push(j);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            raw.push(members);
        }
        let order = n;
        let orders: Vec<u64> = raw.iter().map(|m| self.elements[m[0]].order()).collect();
        // sort by element order, then decreasing centralizer, then first member
        let mut perm: Vec<usize> = (0..raw.len()).collect();
        perm.sort_by_key(|&c| (orders[c], raw[c].len(), raw[c][0]));
        let mut new_index = vec![0; raw.len()];
        for (new, &old) in perm.iter().enumerate() {
            new_index[old] = new;
        }
        for c in class_of.iter_mut() {
            *c = new_index[*c];
        }
        let primes = prime_factors(order as u64);
        let mut letter_count: HashMap<u64, usize> = HashMap::new();
        let mut classes = Vec::with_capacity(raw.len());
        for &old in &perm {
            let members = raw[old].clone();
            let rep = members[0];
            let ord = orders[old];
            let k = letter_count.entry(ord).or_insert(0);
            let name = format!("{ord}{}", class_letter(*k));
            *k += 1;
            let x = &self.elements[rep];
            let inverse = class_of[self.index[&x.inverse()]];
            let power_maps = primes
                .iter()
                .map(|&p| {
                    let mut y = Perm::identity(self.degree);
                    for _ in 0..p {
                        y = y.mul(x);
                    }
                    (p, class_of[self.index[&y]])
                })
                .collect();
            classes.push(ConjClass {
                name,
                representative: rep,
                size: members.len(),
                element_order: ord,
                centralizer_order: order / members.len(),
                inverse,
                power_maps,
                members,
            });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].mul(&self.elements[j])]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.index[&self.elements[i].inverse()]
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_by_name(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    /// Generator indices whose product (left to right) is element `i`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((p, s)) = self.parent[i] {
            w.push(s);
            i = p;
        }
        w.reverse();
        w
    }

    /// Number of `(x, y) ∈ C_i × C_j` with `xy = g_k`, counted directly.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> usize {
        let target = &self.elements[self.classes[k].representative];
        self.classes[i]
            .members
            .iter()
            .filter(|&&x| {
                let y = self.elements[x].inverse().mul(target);
                self.class_of[self.index[&y]] == j
            })
            .count()
    }

    /// Number of elements with `g² = 1`.
    pub fn count_square_roots_of_identity(&self) -> usize {
        self.classes.iter().filter(|c| c.element_order <= 2).map(|c| c.size).sum()
    }
}

fn class_letter(k: usize) -> String {
    let letters = b"ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    if k < 26 {
        (letters[k] as char).to_string()
    } else {
        format!("{}{}", letters[k % 26] as char, k / 26)
    }
}
