use std::fmt;

use super::EnumeratedGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reality {
    NonReal,
    WeaklyReal,
    StronglyReal,
}

impl Reality {
    pub fn is_real(self) -> bool {
        self != Reality::NonReal
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Reality::NonReal => "non-real",
            Reality::WeaklyReal => "weakly-real",
            Reality::StronglyReal => "strongly-real",
        }
    }
}

impl fmt::Display for Reality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReality {
    pub name: String,
    pub element_order: u64,
    pub size: usize,
    pub centralizer_order: usize,
    /// A printable representative when one is known (group input only).
    pub representative: Option<String>,
    pub reality: Reality,
}

impl ClassReality {
    pub fn is_two_regular(&self) -> bool {
        self.element_order % 2 == 1
    }
}

/// Reality tags for every class, in the class order of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRealityReport {
    pub classes: Vec<ClassReality>,
}

impl ClassRealityReport {
    pub fn two_regular(&self) -> impl Iterator<Item = (usize, &ClassReality)> {
        self.classes.iter().enumerate().filter(|(_, c)| c.is_two_regular())
    }

    fn count(&self, r: Reality) -> usize {
        self.two_regular().filter(|(_, c)| c.reality == r).count()
    }

    pub fn strongly_real_two_regular(&self) -> usize {
        self.count(Reality::StronglyReal)
    }

    pub fn weakly_real_two_regular(&self) -> usize {
        self.count(Reality::WeaklyReal)
    }

    pub fn real_two_regular(&self) -> usize {
        self.two_regular().filter(|(_, c)| c.reality.is_real()).count()
    }

    pub fn names_with(&self, r: Reality, two_regular_only: bool) -> Vec<String> {
        self.classes
            .iter()
            .filter(|c| c.reality == r && (!two_regular_only || c.is_two_regular()))
            .map(|c| c.name.clone())
            .collect()
    }
}

impl EnumeratedGroup {
    /// Tags every class as non-real, weakly real or strongly real.
    ///
    /// `g` is strongly real if `g² = 1` or the coset `C*(g) ∖ C(g)` of
    /// elements inverting `g` contains an involution.
    pub fn reality_classification(&self) -> ClassRealityReport {
        let classes = self
            .classes()
            .iter()
            .enumerate()
            .map(|(ci, c)| {
                let reality = if c.inverse != ci {
                    Reality::NonReal
                } else if c.element_order <= 2 || self.inverted_by_involution(c.representative) {
                    Reality::StronglyReal
                } else {
                    Reality::WeaklyReal
                };
                ClassReality {
                    name: c.name.clone(),
                    element_order: c.element_order,
                    size: c.size,
                    centralizer_order: c.centralizer_order,
                    representative: Some(format!("{:?}", self.element(c.representative))),
                    reality,
                }
            })
            .collect();
        ClassRealityReport { classes }
    }

    /// The centralizer of element `g` as a list of element indices.
    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        let x = self.element(g);
        (0..self.order())
            .filter(|&c| {
                let y = self.element(c);
                x.mul(y) == y.mul(x)
            })
            .collect()
    }

    /// Some `x` with `x⁻¹ g x = g⁻¹`, if `g` is real.
    fn inverting_element(&self, g: usize) -> Option<usize> {
        let target = self.element(g).inverse();
        let x = self.element(g);
        (0..self.order()).find(|&c| {
            let y = self.element(c);
            y.inverse().mul(x).mul(y) == target
        })
    }

    fn inverted_by_involution(&self, g: usize) -> bool {
        let Some(x0) = self.inverting_element(g) else { return false };
        // C*(g) ∖ C(g) is the coset C(g)·x0
        self.centralizer(g).into_iter().any(|c| {
            let t = self.element(c).mul(self.element(x0));
            t.order() == 2
        })
    }
}
