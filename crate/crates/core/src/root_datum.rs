//! Based root data of split reductive groups.
//!
//! A datum lives on the cocharacter lattice `X_*(T) = Z^rank`. Simple roots are
//! integer covectors, simple coroots integer vectors, and the pairing is the
//! standard dot product. Presets cover `GL_n`, `SL_n`, `PGL_n` and `GSp_{2g}`;
//! anything of classical type can be entered explicitly.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_rational::Rational64;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fin_ab::FinAbGroup;
use crate::lattice::{self, dot, IntMatrix};

/// Integer cocharacter, coordinates in the datum's lattice basis.
pub type Cocharacter = Vec<i64>;

/// How a group was specified; kept on the datum for provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Preset {
        preset: String,
        n: usize,
    },
    Explicit {
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        rank: usize,
    },
}

impl GroupSpec {
    pub fn preset(name: &str, n: usize) -> Self {
        GroupSpec::Preset {
            preset: name.to_string(),
            n,
        }
    }

    /// Parses compact names like `GL3`, `SL2`, `PGL4`, `GSp4`.
    pub fn parse_name(s: &str) -> Result<Self> {
        let split = s
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::InvalidGroupSpec(format!("`{s}` has no size suffix")))?;
        let (name, digits) = s.split_at(split);
        let n: usize = digits
            .parse()
            .map_err(|_| Error::InvalidGroupSpec(format!("bad size in `{s}`")))?;
        let preset = match name.to_ascii_uppercase().as_str() {
            "GL" => "GL",
            "SL" => "SL",
            "PGL" => "PGL",
            "GSP" => "GSp",
            _ => return Err(Error::InvalidGroupSpec(format!("unknown preset `{name}`"))),
        };
        Ok(GroupSpec::preset(preset, n))
    }

    pub fn label(&self) -> String {
        match self {
            GroupSpec::Preset { preset, n } => format!("{preset}{n}"),
            GroupSpec::Explicit { rank, .. } => format!("explicit(rank {rank})"),
        }
    }
}

/// Which variant of the dominance order to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    /// `mu - lambda` is a non-negative rational combination of simple coroots.
    Rational,
    /// `mu - lambda` is a non-negative integral combination of simple coroots.
    Integral,
}

/// A rational cocharacter `numer / denom` with `denom > 0` minimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalCocharacter {
    numer: Vec<i64>,
    denom: i64,
}

impl RationalCocharacter {
    pub fn new(numer: Vec<i64>, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        let sign = denom.signum();
        let g = numer
            .iter()
            .fold(denom.abs(), |g, &x| num_integer::gcd(g, x.abs()));
        RationalCocharacter {
            numer: numer.iter().map(|x| sign * x / g).collect(),
            denom: denom.abs() / g,
        }
    }

    pub fn integral(v: &[i64]) -> Self {
        Self::new(v.to_vec(), 1)
    }

    pub fn numer(&self) -> &[i64] {
        &self.numer
    }

    pub fn denominator(&self) -> i64 {
        self.denom
    }

    pub fn coords(&self) -> Vec<Rational64> {
        self.numer
            .iter()
            .map(|&x| Rational64::new(x, self.denom))
            .collect()
    }

    pub fn pairing(&self, covector: &[i64]) -> Rational64 {
        Rational64::new(dot(&self.numer, covector), self.denom)
    }

    pub fn len(&self) -> usize {
        self.numer.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numer.is_empty()
    }
}

impl fmt::Display for RationalCocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for RationalCocharacter {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        parts.serialize(serializer)
    }
}

/// Cartan type of one irreducible component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentType {
    pub family: char,
    pub rank: usize,
}

impl ComponentType {
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            'A' => n * (n + 1) / 2,
            'B' | 'C' => n * n,
            'D' => n * (n - 1),
            _ => unreachable!("only classical families are accepted"),
        }
    }
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    /// Positive roots aligned with `positive_coroots`.
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    /// Simple-coroot coefficients of each positive coroot.
    coroot_coefficients: Vec<Vec<i64>>,
    cartan: IntMatrix,
    cartan_inverse: Vec<Vec<Rational64>>,
    components: Vec<Vec<usize>>,
    component_types: Vec<ComponentType>,
    spec: GroupSpec,
}

impl RootDatum {
    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        match spec {
            GroupSpec::Preset { preset, n } => match preset.to_ascii_uppercase().as_str() {
                "GL" => Self::gl(*n),
                "SL" => Self::sl(*n),
                "PGL" => Self::pgl(*n),
                "GSP" => Self::gsp(*n),
                other => Err(Error::InvalidGroupSpec(format!("unknown preset `{other}`"))),
            },
            GroupSpec::Explicit {
                simple_roots,
                simple_coroots,
                rank,
            } => Self::new(*rank, simple_roots.clone(), simple_coroots.clone(), spec.clone()),
        }
    }

    /// `GL_n` on the standard lattice `Z^n`.
    pub fn gl(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroupSpec("GL needs n >= 1".into()));
        }
        let simple: Vec<Vec<i64>> = (0..n - 1)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v[i + 1] = -1;
                v
            })
            .collect();
        Self::new(n, simple.clone(), simple, GroupSpec::preset("GL", n))
    }

    /// `SL_n`; the lattice is the coroot lattice, coordinates are simple-coroot coefficients.
    pub fn sl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGroupSpec("SL needs n >= 2".into()));
        }
        let a = type_a_cartan(n - 1);
        let coroots = lattice::identity(n - 1);
        Self::new(n - 1, a, coroots, GroupSpec::preset("SL", n))
    }

    /// `PGL_n`; coordinates are fundamental-coweight coefficients.
    pub fn pgl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGroupSpec("PGL needs n >= 2".into()));
        }
        let a = type_a_cartan(n - 1);
        let roots = lattice::identity(n - 1);
        let coroots = (0..n - 1).map(|j| lattice::column(&a, j)).collect();
        Self::new(n - 1, roots, coroots, GroupSpec::preset("PGL", n))
    }

    /// `GSp_n` for even `n = 2g` on the similitude lattice `Z^{g+1}`:
    /// `(a_1, .., a_g, c)` is the cocharacter
    /// `t -> diag(t^{a_1}, .., t^{a_g}, t^{c - a_g}, .., t^{c - a_1})`.
    pub fn gsp(n: usize) -> Result<Self> {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(Error::InvalidGroupSpec("GSp needs an even n >= 2".into()));
        }
        let g = n / 2;
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        for i in 0..g - 1 {
            let mut v = vec![0; g + 1];
            v[i] = 1;
            v[i + 1] = -1;
            roots.push(v.clone());
            coroots.push(v);
        }
        let mut long = vec![0; g + 1];
        long[g - 1] = 2;
        long[g] = -1;
        roots.push(long);
        let mut long_co = vec![0; g + 1];
        long_co[g - 1] = 1;
        coroots.push(long_co);
        Self::new(g + 1, roots, coroots, GroupSpec::preset("GSp", n))
    }

    /// Validates and completes a based root datum.
    pub fn new(
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        spec: GroupSpec,
    ) -> Result<Self> {
        if simple_roots.len() != simple_coroots.len() {
            return Err(Error::InvalidGroupSpec(format!(
                "{} simple roots but {} simple coroots",
                simple_roots.len(),
                simple_coroots.len()
            )));
        }
        for v in simple_roots.iter().chain(&simple_coroots) {
            if v.len() != rank {
                return Err(Error::NotInLattice {
                    vector: v.clone(),
                    rank,
                });
            }
        }
        let l = simple_roots.len();
        let cartan: IntMatrix = (0..l)
            .map(|i| (0..l).map(|j| dot(&simple_coroots[j], &simple_roots[i])).collect())
            .collect();
        check_cartan(&cartan)?;
        let components = components(&cartan);
        let component_types = components
            .iter()
            .map(|c| classify(&cartan, c))
            .collect::<Result<Vec<_>>>()?;
        let cartan_q: Vec<Vec<Rational64>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
            .collect();
        let cartan_inverse = lattice::rational_inverse(&cartan_q)
            .ok_or_else(|| Error::InvalidCartan("singular Cartan matrix".into()))?;

        let mut datum = RootDatum {
            rank,
            simple_roots,
            simple_coroots,
            positive_roots: Vec::new(),
            positive_coroots: Vec::new(),
            coroot_coefficients: Vec::new(),
            cartan,
            cartan_inverse,
            components,
            component_types,
            spec,
        };
        datum.generate_positive_system()?;
        Ok(datum)
    }

    fn generate_positive_system(&mut self) -> Result<()> {
        let l = self.simple_roots.len();
        let expected: usize = self
            .component_types
            .iter()
            .map(|t| t.positive_root_count())
            .sum();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
        for i in 0..l {
            let pair = (self.simple_roots[i].clone(), self.simple_coroots[i].clone());
            if seen.insert(pair.1.clone()) {
                queue.push_back(pair);
            }
        }
        let mut all = Vec::new();
        while let Some((root, coroot)) = queue.pop_front() {
            for i in 0..l {
                let r = self.reflect_covector(i, &root);
                let c = self.reflect_simple(i, &coroot);
                if seen.insert(c.clone()) {
                    if seen.len() > 4 * expected + 4 {
                        return Err(Error::InvalidCartan("root system closure does not terminate".into()));
                    }
                    queue.push_back((r, c));
                }
            }
            all.push((root, coroot));
        }
        let mut positive: Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> = Vec::new();
        for (root, coroot) in all {
            let coeffs = self
                .coroot_coefficients(&coroot)
                .ok_or_else(|| Error::Inconsistent("coroot outside the coroot span".into()))?;
            if coeffs.iter().any(|c| !c.is_integer()) {
                return Err(Error::Inconsistent("non-integral coroot coefficients".into()));
            }
            let ints: Vec<i64> = coeffs.iter().map(|c| c.to_integer()).collect();
            if ints.iter().all(|&c| c >= 0) {
                positive.push((root, coroot, ints));
            } else if !ints.iter().all(|&c| c <= 0) {
                return Err(Error::Inconsistent("coroot of mixed sign".into()));
            }
        }
        // height, then simple-coroot coefficients in descending lexicographic order
        positive.sort_by(|a, b| {
            let ha: i64 = a.2.iter().sum();
            let hb: i64 = b.2.iter().sum();
            ha.cmp(&hb).then_with(|| b.2.cmp(&a.2))
        });
        if positive.len() != expected {
            return Err(Error::Inconsistent(format!(
                "found {} positive coroots, type {} has {}",
                positive.len(),
                self.type_label(),
                expected
            )));
        }
        for (r, c, k) in positive {
            self.positive_roots.push(r);
            self.positive_coroots.push(c);
            self.coroot_coefficients.push(k);
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn name(&self) -> String {
        self.spec.label()
    }

    /// Irreducible components as lists of simple-root indices.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_types(&self) -> &[ComponentType] {
        &self.component_types
    }

    /// `A2`, `C2`, `A1xA1`, or `T` for a torus.
    pub fn type_label(&self) -> String {
        if self.component_types.is_empty() {
            return "T".to_string();
        }
        self.component_types
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn height(&self, positive_index: usize) -> i64 {
        self.coroot_coefficients[positive_index].iter().sum()
    }

    /// Index of the highest root of an irreducible component.
    pub fn highest_root(&self, component: usize) -> usize {
        let nodes = &self.components[component];
        (0..self.positive_roots.len())
            .filter(|&k| {
                self.coroot_coefficients[k]
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || nodes.contains(&i))
            })
            .max_by_key(|&k| self.root_height(k))
            .expect("component has roots")
    }

    /// Height of a positive root in terms of simple roots.
    fn root_height(&self, positive_index: usize) -> i64 {
        let root = &self.positive_roots[positive_index];
        // solve root = sum c_i alpha_i via pairing with simple coroots
        let p: Vec<Rational64> = self
            .simple_coroots
            .iter()
            .map(|c| Rational64::from_integer(dot(c, root)))
            .collect();
        let l = self.semisimple_rank();
        (0..l)
            .map(|i| (0..l).map(|j| self.cartan_inverse[j][i] * p[j]).sum::<Rational64>())
            .sum::<Rational64>()
            .to_integer()
    }

    fn check_rank(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Rational coefficients of `x` in the simple coroots, `None` if `x` is
    /// outside their span.
    pub fn coroot_coefficients(&self, x: &[i64]) -> Option<Vec<Rational64>> {
        let l = self.semisimple_rank();
        let p: Vec<Rational64> = self
            .simple_roots
            .iter()
            .map(|a| Rational64::from_integer(dot(x, a)))
            .collect();
        let c: Vec<Rational64> = (0..l)
            .map(|i| (0..l).map(|j| self.cartan_inverse[i][j] * p[j]).sum())
            .collect();
        let back: Vec<Rational64> = (0..self.rank)
            .map(|k| {
                (0..l)
                    .map(|j| c[j] * Rational64::from_integer(self.simple_coroots[j][k]))
                    .sum()
            })
            .collect();
        if back
            .iter()
            .zip(x)
            .all(|(b, &xi)| *b == Rational64::from_integer(xi))
        {
            Some(c)
        } else {
            None
        }
    }

    fn rational_coroot_coefficients(&self, x: &[Rational64]) -> Option<Vec<Rational64>> {
        let l = self.semisimple_rank();
        let p: Vec<Rational64> = self
            .simple_roots
            .iter()
            .map(|a| x.iter().zip(a).map(|(xi, &ai)| *xi * ai).sum())
            .collect();
        let c: Vec<Rational64> = (0..l)
            .map(|i| (0..l).map(|j| self.cartan_inverse[i][j] * p[j]).sum())
            .collect();
        let ok = (0..self.rank).all(|k| {
            let b: Rational64 = (0..l)
                .map(|j| c[j] * Rational64::from_integer(self.simple_coroots[j][k]))
                .sum();
            b == x[k]
        });
        ok.then_some(c)
    }

    /// `lambda ≤ mu` (rational) or `lambda ⪯ mu` (integral).
    pub fn dominance_leq(&self, lambda: &[i64], mu: &[i64], kind: Dominance) -> Result<bool> {
        self.check_rank(lambda)?;
        self.check_rank(mu)?;
        let diff: Vec<i64> = mu.iter().zip(lambda).map(|(m, l)| m - l).collect();
        let Some(c) = self.coroot_coefficients(&diff) else {
            return Ok(false);
        };
        Ok(c.iter().all(|x| !x.is_negative()) && (kind == Dominance::Rational || c.iter().all(|x| x.is_integer())))
    }

    /// Rational dominance between rational cocharacters.
    pub fn dominance_leq_rational(&self, lambda: &RationalCocharacter, mu: &RationalCocharacter) -> Result<bool> {
        self.check_rank(lambda.numer())?;
        self.check_rank(mu.numer())?;
        let diff: Vec<Rational64> = mu
            .coords()
            .iter()
            .zip(lambda.coords())
            .map(|(m, l)| m - l)
            .collect();
        Ok(self
            .rational_coroot_coefficients(&diff)
            .is_some_and(|c| c.iter().all(|x| !x.is_negative())))
    }

    /// `s_i(x) = x - <x, alpha_i> alpha_i^vee`.
    pub fn reflect_simple(&self, i: usize, x: &[i64]) -> Vec<i64> {
        let p = dot(x, &self.simple_roots[i]);
        x.iter()
            .zip(&self.simple_coroots[i])
            .map(|(a, c)| a - p * c)
            .collect()
    }

    /// `s_i(f) = f - <alpha_i^vee, f> alpha_i` on covectors.
    pub fn reflect_covector(&self, i: usize, f: &[i64]) -> Vec<i64> {
        let p = dot(&self.simple_coroots[i], f);
        f.iter()
            .zip(&self.simple_roots[i])
            .map(|(a, r)| a - p * r)
            .collect()
    }

    /// Matrix of the simple reflection `s_i` on the cocharacter lattice.
    pub fn simple_reflection_matrix(&self, i: usize) -> IntMatrix {
        self.reflection_matrix(&self.simple_roots[i], &self.simple_coroots[i])
    }

    /// Matrix of `x -> x - <x, root> coroot`.
    pub fn reflection_matrix(&self, root: &[i64], coroot: &[i64]) -> IntMatrix {
        (0..self.rank)
            .map(|a| {
                (0..self.rank)
                    .map(|b| i64::from(a == b) - coroot[a] * root[b])
                    .collect()
            })
            .collect()
    }

    pub fn is_dominant(&self, x: &[i64]) -> bool {
        self.simple_roots.iter().all(|a| dot(x, a) >= 0)
    }

    /// Dominant representative together with the simple reflections applied,
    /// in application order (so the Weyl element is `s_{last} ... s_{first}`).
    pub fn dominant_rep(&self, x: &[i64]) -> (Cocharacter, Vec<usize>) {
        let mut cur = x.to_vec();
        let mut word = Vec::new();
        while let Some(i) = (0..self.semisimple_rank()).find(|&i| dot(&cur, &self.simple_roots[i]) < 0) {
            cur = self.reflect_simple(i, &cur);
            word.push(i);
        }
        (cur, word)
    }

    pub fn dominant_rep_rational(&self, x: &RationalCocharacter) -> RationalCocharacter {
        RationalCocharacter::new(self.dominant_rep(x.numer()).0, x.denominator())
    }

    /// W_0-orbit, sorted in descending lexicographic order.
    pub fn weyl_orbit(&self, x: &[i64]) -> Vec<Cocharacter> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::from([x.to_vec()]);
        seen.insert(x.to_vec());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.semisimple_rank() {
                let w = self.reflect_simple(i, &v);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// `|<x, alpha>| <= 1` for every root.
    pub fn is_minuscule(&self, x: &[i64]) -> bool {
        self.positive_roots.iter().all(|a| dot(x, a).abs() <= 1)
    }

    /// Sum of pairings with all positive roots, i.e. `<x, 2 rho>`.
    pub fn pairing_with_2rho(&self, x: &[i64]) -> i64 {
        self.positive_roots.iter().map(|a| dot(x, a)).sum()
    }

    /// `X_*(T) / L` where `L` defaults to the coroot lattice.
    pub fn fundamental_group(&self, sublattice: Option<&[Vec<i64>]>) -> FinAbGroup {
        FinAbGroup::quotient(self.rank, sublattice.unwrap_or(&self.simple_coroots))
    }

    /// Sub-datum on the same lattice with the given positive roots as simple system.
    pub fn sub_datum(&self, simple_positive_indices: &[usize]) -> Result<RootDatum> {
        let roots = simple_positive_indices
            .iter()
            .map(|&k| self.positive_roots[k].clone())
            .collect();
        let coroots = simple_positive_indices
            .iter()
            .map(|&k| self.positive_coroots[k].clone())
            .collect();
        RootDatum::new(self.rank, roots, coroots, self.spec.clone())
    }
}

fn type_a_cartan(l: usize) -> IntMatrix {
    (0..l)
        .map(|i| {
            (0..l)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

fn check_cartan(a: &IntMatrix) -> Result<()> {
    let l = a.len();
    for i in 0..l {
        if a[i][i] != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) is {}", a[i][i])));
        }
        for j in 0..l {
            if i != j {
                if a[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!("positive off-diagonal entry at ({i},{j})")));
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!("asymmetric zero pattern at ({i},{j})")));
                }
            }
        }
    }
    // symmetrize: d_i a_ij = d_j a_ji
    let mut d: Vec<Option<Rational64>> = vec![None; l];
    for start in 0..l {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational64::from_integer(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].unwrap();
            for j in 0..l {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let dj = di * Rational64::new(a[i][j], a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::NotFiniteType {
                            size: l,
                            value: "not symmetrizable".into(),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let sym: Vec<Vec<Rational64>> = (0..l)
        .map(|i| (0..l).map(|j| d[i].unwrap() * a[i][j]).collect())
        .collect();
    for k in 1..=l {
        let minor: Vec<Vec<Rational64>> = sym[..k].iter().map(|r| r[..k].to_vec()).collect();
        let det = lattice::rational_det(&minor);
        if !det.is_positive() {
            return Err(Error::NotFiniteType {
                size: k,
                value: det.to_string(),
            });
        }
    }
    Ok(())
}

fn components(a: &IntMatrix) -> Vec<Vec<usize>> {
    let l = a.len();
    let mut seen = vec![false; l];
    let mut out = Vec::new();
    for s in 0..l {
        if seen[s] {
            continue;
        }
        let mut comp = vec![];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(i) = stack.pop() {
            comp.push(i);
            for j in 0..l {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn classify(a: &IntMatrix, nodes: &[usize]) -> Result<ComponentType> {
    let k = nodes.len();
    let neighbours = |i: usize| -> Vec<usize> {
        nodes
            .iter()
            .copied()
            .filter(|&j| j != i && a[i][j] != 0)
            .collect()
    };
    let mut multi = Vec::new();
    for (x, &i) in nodes.iter().enumerate() {
        for &j in &nodes[x + 1..] {
            let m = a[i][j] * a[j][i];
            if m > 1 {
                multi.push((i, j, m));
            }
        }
    }
    if multi.iter().any(|&(_, _, m)| m >= 3) {
        return Err(Error::Unsupported("exceptional type G2".into()));
    }
    if multi.len() > 1 {
        return Err(Error::Unsupported("more than one multiple bond".into()));
    }
    let degree_max = nodes.iter().map(|&i| neighbours(i).len()).max().unwrap_or(0);
    if let Some(&(i, j, _)) = multi.first() {
        if degree_max > 2 {
            return Err(Error::Unsupported("branched non-simply-laced diagram".into()));
        }
        // short root sits where |a_ij| = 2 in its column
        let (leaf, other) = if k == 2 || neighbours(j).len() == 1 {
            (j, i)
        } else if neighbours(i).len() == 1 {
            (i, j)
        } else {
            return Err(Error::Unsupported("exceptional type F4".into()));
        };
        let family = if a[other][leaf] == -2 { 'B' } else { 'C' };
        return Ok(ComponentType { family, rank: k });
    }
    if degree_max <= 2 {
        return Ok(ComponentType { family: 'A', rank: k });
    }
    let branch: Vec<usize> = nodes
        .iter()
        .copied()
        .filter(|&i| neighbours(i).len() == 3)
        .collect();
    if branch.len() != 1 {
        return Err(Error::Unsupported("unrecognised simply-laced diagram".into()));
    }
    let b = branch[0];
    let mut arms: Vec<usize> = neighbours(b)
        .into_iter()
        .map(|start| {
            let (mut prev, mut cur, mut len) = (b, start, 1);
            loop {
                let next: Vec<usize> = neighbours(cur).into_iter().filter(|&x| x != prev).collect();
                match next.as_slice() {
                    [n] => {
                        prev = cur;
                        cur = *n;
                        len += 1;
                    }
                    _ => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    if arms[0] == 1 && arms[1] == 1 {
        Ok(ComponentType { family: 'D', rank: k })
    } else {
        Err(Error::Unsupported(format!("exceptional type E{k}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_has_one_positive_coroot() {
        let rd = RootDatum::gl(2).unwrap();
        assert_eq!(rd.positive_coroots(), &[vec![1, -1]]);
        assert_eq!(rd.type_label(), "A1");
    }

    #[test]
    fn gl3_positive_coroots_in_order() {
        let rd = RootDatum::gl(3).unwrap();
        assert_eq!(
            rd.positive_coroots(),
            &[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]]
        );
    }

    #[test]
    fn gsp4_is_c2_with_four_positive_coroots() {
        let rd = RootDatum::gsp(4).unwrap();
        assert_eq!(rd.type_label(), "C2");
        assert_eq!(rd.positive_coroots().len(), 4);
        // reflection closure oracle
        let mut closure: HashSet<Vec<i64>> = rd.simple_coroots().iter().cloned().collect();
        loop {
            let before = closure.len();
            let cur: Vec<_> = closure.iter().cloned().collect();
            for c in cur {
                for i in 0..rd.semisimple_rank() {
                    closure.insert(rd.reflect_simple(i, &c));
                }
            }
            if closure.len() == before {
                break;
            }
        }
        let pos: HashSet<_> = closure
            .into_iter()
            .filter(|c| rd.coroot_coefficients(c).unwrap().iter().all(|x| !x.is_negative()))
            .collect();
        assert_eq!(pos.len(), 4);
        assert_eq!(pos, rd.positive_coroots().iter().cloned().collect());
    }

    #[test]
    fn simple_coroots_are_positive() {
        for rd in [RootDatum::gl(4).unwrap(), RootDatum::gsp(6).unwrap(), RootDatum::pgl(3).unwrap()] {
            for c in rd.simple_coroots() {
                assert!(rd.positive_coroots().contains(c));
            }
        }
    }

    #[test]
    fn rejects_affine_cartan() {
        // affine A1: <a1v, a0> = -2
        let err = RootDatum::new(
            2,
            vec![vec![1, -1], vec![-1, 1]],
            vec![vec![1, -1], vec![-1, 1]],
            GroupSpec::Explicit {
                simple_roots: vec![],
                simple_coroots: vec![],
                rank: 2,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotFiniteType { size: 2, .. }), "{err}");
    }

    #[test]
    fn rejects_coroot_outside_lattice() {
        let err = RootDatum::new(
            2,
            vec![vec![1, -1]],
            vec![vec![1, -1, 0]],
            GroupSpec::preset("x", 0),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotInLattice { .. }));
    }

    #[test]
    fn explicit_b2_and_d4() {
        // SO_5 on the standard lattice: roots e1-e2, e2; coroots e1-e2, 2e2
        let b2 = RootDatum::new(2, vec![vec![1, -1], vec![0, 1]], vec![vec![1, -1], vec![0, 2]], GroupSpec::preset("x", 0))
            .unwrap();
        assert_eq!(b2.type_label(), "B2");
        assert_eq!(b2.positive_roots().len(), 4);
        let d4 = RootDatum::new(
            4,
            vec![vec![1, -1, 0, 0], vec![0, 1, -1, 0], vec![0, 0, 1, -1], vec![0, 0, 1, 1]],
            vec![vec![1, -1, 0, 0], vec![0, 1, -1, 0], vec![0, 0, 1, -1], vec![0, 0, 1, 1]],
            GroupSpec::preset("x", 0),
        )
        .unwrap();
        assert_eq!(d4.type_label(), "D4");
        assert_eq!(d4.positive_roots().len(), 12);
    }

    #[test]
    fn dominance_examples() {
        let rd = RootDatum::gl(2).unwrap();
        assert!(rd.dominance_leq(&[1, 1], &[2, 0], Dominance::Integral).unwrap());
        assert!(rd.dominance_leq(&[1, 0], &[1, 0], Dominance::Integral).unwrap());
        assert!(!rd.dominance_leq(&[2, 0], &[1, 1], Dominance::Integral).unwrap());
        assert!(rd.dominance_leq(&[1], &[1, 0], Dominance::Rational).is_err());
        let half = RationalCocharacter::new(vec![1, 1], 2);
        assert!(rd
            .dominance_leq_rational(&half, &RationalCocharacter::integral(&[1, 0]))
            .unwrap());
    }

    #[test]
    fn rational_vs_integral_dominance() {
        // PGL_2: coroot is 2 in coweight coordinates; (1) <= (2)? difference 1 = alpha/2
        let rd = RootDatum::pgl(2).unwrap();
        assert!(rd.dominance_leq(&[0], &[1], Dominance::Rational).unwrap());
        assert!(!rd.dominance_leq(&[0], &[1], Dominance::Integral).unwrap());
        assert!(rd.dominance_leq(&[0], &[2], Dominance::Integral).unwrap());
    }

    #[test]
    fn dominant_rep_examples() {
        let rd = RootDatum::gl(2).unwrap();
        assert_eq!(rd.dominant_rep(&[0, 1]), (vec![1, 0], vec![0]));
        assert_eq!(rd.dominant_rep(&[1, 0]), (vec![1, 0], vec![]));
        let rd3 = RootDatum::gl(3).unwrap();
        let (d, w) = rd3.dominant_rep(&[0, 1, 0]);
        assert_eq!(d, vec![1, 0, 0]);
        assert!(w.len() <= 2);
    }

    #[test]
    fn fundamental_groups() {
        assert_eq!(RootDatum::gl(2).unwrap().fundamental_group(None).invariant_factors(), &[0]);
        assert!(RootDatum::sl(3).unwrap().fundamental_group(None).is_trivial());
        assert_eq!(RootDatum::pgl(3).unwrap().fundamental_group(None).invariant_factors(), &[3]);
        let gsp = RootDatum::gsp(4).unwrap();
        let pi1 = gsp.fundamental_group(None);
        assert_eq!(pi1.invariant_factors(), &[0]);
        // similitude character c detects the class
        let a = pi1.project(&[1, 1, 1]).unwrap();
        let b = pi1.project(&[0, 0, 1]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, pi1.zero());
        assert_eq!(pi1.project(&[5, -3, 0]).unwrap(), pi1.zero());
    }

    #[test]
    fn weyl_orbits() {
        let gl2 = RootDatum::gl(2).unwrap();
        assert_eq!(gl2.weyl_orbit(&[1, 0]), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(gl2.weyl_orbit(&[1, 1]), vec![vec![1, 1]]);
        assert_eq!(RootDatum::gl(3).unwrap().weyl_orbit(&[1, 1, 0]).len(), 3);
    }

    #[test]
    fn parse_group_names() {
        assert_eq!(GroupSpec::parse_name("GSp4").unwrap(), GroupSpec::preset("GSp", 4));
        assert_eq!(GroupSpec::parse_name("gl3").unwrap(), GroupSpec::preset("GL", 3));
        assert!(GroupSpec::parse_name("E8").is_err());
        assert!(GroupSpec::parse_name("GL").is_err());
    }
}
