//! `Sq^1` as a derivation on presented polynomial rings over F2, and its
//! homology computed degree by degree.

pub mod linalg;

use std::collections::{BTreeMap, HashMap};
use std::thread;

use thiserror::Error;

use crate::poly::{F2Poly, Monomial, PolyError, RingPresentation, Variable};
use crate::report::Verification;
use crate::symmfunc::{self, left_class, newton_sums, right_class, stiefel_whitney, SymmError};
use linalg::{kernel, BitVector, Echelon};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteenrodError {
    #[error("no Sq^1 image given for `{0}`")]
    MissingImage(String),
    #[error("Sq^1(`{variable}`) must be homogeneous of degree {expected}")]
    ImageDegree { variable: String, expected: u32 },
    #[error("Sq^1(Sq^1(`{0}`)) is not zero")]
    NotClosed(String),
    #[error("Sq^1(`{0}`) must be its square")]
    Unstable(String),
    #[error("the Wu formula for `{variable}` needs `{needed}`, which is not a generator")]
    MissingGenerator { variable: String, needed: String },
    #[error("homology through degree {max_degree} needs the ring through degree {}, but it is truncated at {truncation}", max_degree + 1)]
    AboveTruncation { max_degree: u32, truncation: u32 },
    #[error("t_max must be positive")]
    ZeroBound,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Symm(#[from] SymmError),
}

/// `Sq^1` on a ring, given on generators.
#[derive(Clone, Debug)]
pub struct Sq1Action {
    ring: RingPresentation,
    images: BTreeMap<Variable, F2Poly>,
}

impl Sq1Action {
    /// Validates degrees, the unstable condition on degree-one generators and
    /// `Sq^1 Sq^1 = 0` on every generator. Images are reduced by the ring's
    /// truncation first.
    pub fn new<I>(ring: RingPresentation, images: I) -> Result<Self, SteenrodError>
    where
        I: IntoIterator<Item = (Variable, F2Poly)>,
    {
        let mut map = BTreeMap::new();
        for (v, img) in images {
            if !ring.has_variable(v) {
                return Err(PolyError::UnknownVariable(v.name().to_owned()).into());
            }
            let img = ring.reduce(&img);
            ring.check(&img)?;
            if !img.is_zero() && (!img.is_homogeneous() || img.degree() != Some(v.degree() + 1)) {
                return Err(SteenrodError::ImageDegree { variable: v.name().to_owned(), expected: v.degree() + 1 });
            }
            map.insert(v, img);
        }
        if let Some(v) = ring.variables().iter().find(|v| !map.contains_key(v)) {
            return Err(SteenrodError::MissingImage(v.name().to_owned()));
        }
        let action = Sq1Action { ring, images: map };
        for (&v, img) in &action.images {
            if v.degree() == 1 && *img != action.ring.pow(&F2Poly::var(v), 2) {
                return Err(SteenrodError::Unstable(v.name().to_owned()));
            }
            if !action.apply(img)?.is_zero() {
                return Err(SteenrodError::NotClosed(v.name().to_owned()));
            }
        }
        Ok(action)
    }

    /// Every generator has degree one and `Sq^1 g = g^2`.
    pub fn squaring(ring: RingPresentation) -> Result<Self, SteenrodError> {
        let images: Vec<_> = ring.variables().iter().map(|&v| (v, F2Poly::var(v).pow(2))).collect();
        Sq1Action::new(ring, images)
    }

    /// The Wu formula `Sq^1 w_k = w_1 w_k + (k+1) w_{k+1}` on a ring whose
    /// generators are Stiefel-Whitney classes. Without `w1` among the
    /// generators this is the action on the quotient by `w1`.
    pub fn wu(ring: RingPresentation) -> Result<Self, SteenrodError> {
        Sq1Action::wu_families(ring, &[stiefel_whitney])
    }

    /// The Wu formula applied separately to each family of classes, e.g. the
    /// two tensor factors.
    pub fn wu_families(ring: RingPresentation, families: &[fn(usize) -> Variable]) -> Result<Self, SteenrodError> {
        let mut images = Vec::new();
        for &v in ring.variables() {
            let k = v.degree() as usize;
            let family =
                families.iter().find(|f| f(k) == v).ok_or_else(|| SymmError::NotStiefelWhitney(v.name().to_owned()))?;
            let mut img = F2Poly::zero();
            if ring.has_variable(family(1)) {
                img += &(F2Poly::var(family(1)) * F2Poly::var(v));
            }
            if k % 2 == 0 && ring.truncation().map_or(true, |t| (k as u32) < t) {
                let next = family(k + 1);
                if !ring.has_variable(next) {
                    return Err(SteenrodError::MissingGenerator {
                        variable: v.name().to_owned(),
                        needed: next.name().to_owned(),
                    });
                }
                img += &F2Poly::var(next);
            }
            images.push((v, img));
        }
        Sq1Action::new(ring, images)
    }

    /// `Z/2[w_first, …, w_{max_degree+1}]` truncated above `max_degree + 1`
    /// with the Wu action; `first` is 1 or 2.
    pub fn wu_truncated(first: usize, max_degree: u32) -> Result<Self, SteenrodError> {
        let top = max_degree + 1;
        let ring = symmfunc::stiefel_whitney_ring(first, top as usize, Some(top))?;
        Sq1Action::wu(ring)
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn image(&self, v: Variable) -> Option<&F2Poly> {
        self.images.get(&v)
    }

    /// Extends the generator images by the Leibniz rule.
    pub fn apply(&self, p: &F2Poly) -> Result<F2Poly, SteenrodError> {
        let mut out = F2Poly::zero();
        for m in p.monomials() {
            out += &self.apply_monomial(m)?;
        }
        Ok(out)
    }

    fn apply_monomial(&self, m: &Monomial) -> Result<F2Poly, SteenrodError> {
        let mut out = F2Poly::zero();
        for &(v, e) in m.factors() {
            let img = self.images.get(&v).ok_or_else(|| PolyError::UnknownVariable(v.name().to_owned()))?;
            // d(v^e) = e v^{e-1} d(v)
            if e % 2 == 1 && !img.is_zero() {
                let (rest, _) = m.split_off(v);
                let rest = rest.mul(&Monomial::power(v, e - 1));
                out += &self.ring.reduce(&img.mul_monomial(&rest));
            }
        }
        Ok(out)
    }
}

pub fn sq1(action: &Sq1Action, p: &F2Poly) -> Result<F2Poly, SteenrodError> {
    action.apply(p)
}

/// Homology in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology {
    pub degree: u32,
    /// `dim ker(Sq^1)` in this degree.
    pub cycles: usize,
    /// `dim im(Sq^1)` landing in this degree.
    pub boundaries: usize,
    pub representatives: Vec<F2Poly>,
}

impl DegreeHomology {
    pub fn dimension(&self) -> usize {
        self.representatives.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sq1Homology {
    degrees: Vec<DegreeHomology>,
}

impl Sq1Homology {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(DegreeHomology::dimension).collect()
    }

    pub fn degree(&self, d: u32) -> Option<&DegreeHomology> {
        self.degrees.get(d as usize)
    }

    pub fn degrees(&self) -> &[DegreeHomology] {
        &self.degrees
    }
}

struct Basis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Basis {
    fn new(ring: &RingPresentation, d: u32) -> Basis {
        let monomials = ring.monomials_of_degree(d);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Basis { monomials, index }
    }

    fn vector(&self, p: &F2Poly) -> BitVector {
        let mut v = BitVector::zeros(self.monomials.len());
        for m in p.monomials() {
            v.set(self.index[m]);
        }
        v
    }

    fn polynomial(&self, v: &BitVector) -> F2Poly {
        v.ones().map(|i| F2Poly::monomial(self.monomials[i].clone())).sum()
    }
}

fn check_range(action: &Sq1Action, max_degree: u32) -> Result<(), SteenrodError> {
    match action.ring.truncation() {
        Some(t) if max_degree + 1 > t => Err(SteenrodError::AboveTruncation { max_degree, truncation: t }),
        _ => Ok(()),
    }
}

fn images(action: &Sq1Action, from: &Basis, to: &Basis) -> Result<Vec<BitVector>, SteenrodError> {
    from.monomials.iter().map(|m| Ok(to.vector(&action.apply_monomial(m)?))).collect()
}

fn boundary_span(action: &Sq1Action, below: Option<&Basis>, here: &Basis) -> Result<Echelon, SteenrodError> {
    let mut span = Echelon::new();
    if let Some(below) = below {
        for v in images(action, below, here)? {
            span.insert(&v);
        }
    }
    Ok(span)
}

fn degree_homology(action: &Sq1Action, d: u32, bases: &[Basis]) -> Result<DegreeHomology, SteenrodError> {
    let here = &bases[d as usize];
    let (cycles, _) = kernel(&images(action, here, &bases[d as usize + 1])?);
    let below = d.checked_sub(1).map(|b| &bases[b as usize]);
    let mut span = boundary_span(action, below, here)?;
    let boundaries = span.rank();
    let representatives = cycles.iter().filter(|c| span.insert(c)).map(|c| here.polynomial(c)).collect();
    Ok(DegreeHomology { degree: d, cycles: cycles.len(), boundaries, representatives })
}

/// `ker Sq^1 / im Sq^1` in degrees `0..=max_degree`, with representatives
/// drawn from the kernel basis in graded-lex order. Degrees are computed on
/// separate threads.
pub fn sq1_homology(action: &Sq1Action, max_degree: u32) -> Result<Sq1Homology, SteenrodError> {
    check_range(action, max_degree)?;
    let bases: Vec<Basis> = (0..=max_degree + 1).map(|d| Basis::new(&action.ring, d)).collect();
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(max_degree as usize + 1);
    let results: Vec<Vec<Result<DegreeHomology, SteenrodError>>> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let bases = &bases;
                s.spawn(move || {
                    (0..=max_degree)
                        .filter(|d| *d as usize % workers == w)
                        .map(|d| degree_homology(action, d, bases))
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("homology worker panicked")).collect()
    });
    let mut degrees: Vec<DegreeHomology> = results.into_iter().flatten().collect::<Result<_, _>>()?;
    degrees.sort_by_key(|h| h.degree);
    Ok(Sq1Homology { degrees })
}

/// Whether `candidates` are cycles of degree `degree` whose classes form a
/// basis of the homology there.
pub fn is_homology_basis(action: &Sq1Action, degree: u32, candidates: &[F2Poly]) -> Result<bool, SteenrodError> {
    check_range(action, degree)?;
    let here = Basis::new(&action.ring, degree);
    let above = Basis::new(&action.ring, degree + 1);
    for c in candidates {
        action.ring.check(c)?;
        if !c.is_zero() && (!c.is_homogeneous() || c.degree() != Some(degree)) {
            return Ok(false);
        }
        if !action.apply(c)?.is_zero() {
            return Ok(false);
        }
    }
    let (cycles, _) = kernel(&images(action, &here, &above)?);
    let below = degree.checked_sub(1).map(|b| Basis::new(&action.ring, b));
    let mut span = boundary_span(action, below.as_ref(), &here)?;
    let independent = candidates.iter().all(|c| span.insert(&here.vector(c)));
    Ok(independent && span.rank() == cycles.len())
}

/// `Sq^1 s_{2t-1} = s_{2t}` and `Sq^1 s_{2t} = 0` in `Z/2[w1, w2, …]`, and
/// `Sq^1(s_{2t-1} ⊗ s_{2t}) = s_{2t} ⊗ s_{2t}`, for `t <= t_max`.
pub fn verify_sn_sq1_identities(t_max: usize) -> Result<Verification, SteenrodError> {
    if t_max == 0 {
        return Err(SteenrodError::ZeroBound);
    }
    let top = 2 * t_max;
    let action = Sq1Action::wu_truncated(1, top as u32)?;
    let sums = newton_sums(top, |k| F2Poly::var(stiefel_whitney(k)));
    let mut report = Verification::new();
    for t in 1..=t_max {
        let (odd, even) = (&sums[2 * t - 2], &sums[2 * t - 1]);
        report.compare(format!("Sq1(s_{}) = s_{}", 2 * t - 1, 2 * t), even, &action.apply(odd)?);
        report.compare(format!("Sq1(s_{}) = 0", 2 * t), &F2Poly::zero(), &action.apply(even)?);
    }

    let trunc = 2 * top as u32;
    let gens: Vec<Variable> = (1..=trunc as usize).flat_map(|k| [left_class(k), right_class(k)]).collect();
    let tensor = Sq1Action::wu_families(RingPresentation::new(gens, Some(trunc))?, &[left_class, right_class])?;
    for t in 1..=t_max {
        let (odd, even) = (&sums[2 * t - 2], &sums[2 * t - 1]);
        let lhs = symmfunc::TensorPolynomial::pure(odd, even)?;
        let rhs = symmfunc::TensorPolynomial::pure(even, even)?;
        let image = symmfunc::TensorPolynomial::from_polynomial(tensor.apply(lhs.polynomial())?)?;
        report.compare(format!("Sq1(s_{}⊗s_{}) = s_{}⊗s_{}", 2 * t - 1, 2 * t, 2 * t, 2 * t), &rhs, &image);
    }
    Ok(report)
}
