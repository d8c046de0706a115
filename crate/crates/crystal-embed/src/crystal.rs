//! Abstract crystal machinery: weights, the signature rule, tensor products,
//! weight shifts, breadth-first graph generation and morphism checking.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The two Cartan types handled by the models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    B,
    C,
}

impl CartanType {
    /// Folding constant: 1 for `B`, 2 for `C`.
    pub fn epsilon(self) -> u32 {
        match self {
            CartanType::B => 1,
            CartanType::C => 2,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::B => write!(f, "B"),
            CartanType::C => write!(f, "C"),
        }
    }
}

impl std::str::FromStr for CartanType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "B" | "b" => Ok(CartanType::B),
            "C" | "c" => Ok(CartanType::C),
            other => Err(format!("unknown Cartan type {other:?}")),
        }
    }
}

/// A weight written in the basis `ε_1..ε_n`, every coordinate stored doubled.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfWeight(pub Vec<i32>);

impl HalfWeight {
    pub fn zero(n: usize) -> Self {
        HalfWeight(vec![0; n])
    }

    /// The weight `±ε_k` (k is 1-based).
    pub fn unit(n: usize, k: usize, sign: i32) -> Self {
        let mut w = vec![0; n];
        w[k - 1] = 2 * sign;
        HalfWeight(w)
    }

    /// The weight `m·(ε_1+…+ε_n)/2`.
    pub fn half_sum(n: usize, m: i32) -> Self {
        HalfWeight(vec![m; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, k: i32) -> Self {
        HalfWeight(self.0.iter().map(|x| x * k).collect())
    }

    pub fn add_doubled(&mut self, k: usize, v: i32) {
        self.0[k - 1] += v;
    }
}

impl Add for &HalfWeight {
    type Output = HalfWeight;
    fn add(self, rhs: &HalfWeight) -> HalfWeight {
        HalfWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &HalfWeight {
    type Output = HalfWeight;
    fn sub(self, rhs: &HalfWeight) -> HalfWeight {
        HalfWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &HalfWeight {
    type Output = HalfWeight;
    fn neg(self) -> HalfWeight {
        HalfWeight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for HalfWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            if x % 2 == 0 {
                write!(f, "{}", x / 2)?;
            } else {
                write!(f, "{x}/2")?;
            }
        }
        write!(f, ")")
    }
}

/// Rank and type of a root datum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cartan {
    pub ty: CartanType,
    pub n: usize,
}

impl Cartan {
    pub fn new(ty: CartanType, n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        Cartan { ty, n }
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// `⟨wt, h_i⟩`.
    pub fn pairing(&self, wt: &HalfWeight, i: usize) -> i32 {
        let d = &wt.0;
        let doubled = if i < self.n {
            d[i - 1] - d[i]
        } else {
            match self.ty {
                CartanType::C => d[self.n - 1],
                CartanType::B => 2 * d[self.n - 1],
            }
        };
        debug_assert!(doubled % 2 == 0, "non-integral pairing for {wt} at {i}");
        doubled / 2
    }

    /// Whether `⟨wt, h_i⟩` is an integer for every `i`.
    pub fn pairing_is_integral(&self, wt: &HalfWeight) -> bool {
        let d = &wt.0;
        (1..self.n).all(|i| (d[i - 1] - d[i]) % 2 == 0)
            && match self.ty {
                CartanType::C => d[self.n - 1] % 2 == 0,
                CartanType::B => true,
            }
    }

    /// The simple root `α_i`.
    pub fn alpha(&self, i: usize) -> HalfWeight {
        let mut w = HalfWeight::zero(self.n);
        if i < self.n {
            w.0[i - 1] = 2;
            w.0[i] = -2;
        } else {
            w.0[self.n - 1] = match self.ty {
                CartanType::C => 4,
                CartanType::B => 2,
            };
        }
        w
    }

    /// The fundamental weight `ω_k`.
    pub fn omega(&self, k: usize) -> HalfWeight {
        let mut w = HalfWeight::zero(self.n);
        let half = k == self.n && self.ty == CartanType::B;
        for x in w.0.iter_mut().take(k) {
            *x = if half { 1 } else { 2 };
        }
        w
    }
}

/// An element of `ℤ ∪ {−∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ext {
    NegInf,
    Fin(i32),
}

impl Ext {
    pub fn fin(self) -> Option<i32> {
        match self {
            Ext::Fin(v) => Some(v),
            Ext::NegInf => None,
        }
    }
}

impl Add<i32> for Ext {
    type Output = Ext;
    fn add(self, rhs: i32) -> Ext {
        match self {
            Ext::Fin(v) => Ext::Fin(v + rhs),
            Ext::NegInf => Ext::NegInf,
        }
    }
}

impl Sub<i32> for Ext {
    type Output = Ext;
    fn sub(self, rhs: i32) -> Ext {
        self + (-rhs)
    }
}

impl From<i32> for Ext {
    fn from(v: i32) -> Ext {
        Ext::Fin(v)
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Fin(v) => write!(f, "{v}"),
            Ext::NegInf => write!(f, "-inf"),
        }
    }
}

/// Weight together with `ε_i`, `φ_i` for `i = 1..n` (stored at index `i-1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrystalStats {
    pub wt: HalfWeight,
    pub eps: Vec<Ext>,
    pub phi: Vec<Ext>,
}

impl CrystalStats {
    pub fn eps(&self, i: usize) -> Ext {
        self.eps[i - 1]
    }

    pub fn phi(&self, i: usize) -> Ext {
        self.phi[i - 1]
    }

    /// Stats of `t_μ`: weight `μ`, `ε_i = φ_i = −∞`.
    pub fn t_mu(mu: HalfWeight) -> Self {
        let n = mu.n();
        CrystalStats { wt: mu, eps: vec![Ext::NegInf; n], phi: vec![Ext::NegInf; n] }
    }

    /// Fill `φ` from `ε` and the weight.
    pub fn from_eps(cartan: &Cartan, wt: HalfWeight, eps: Vec<Ext>) -> Self {
        let phi = cartan.indices().map(|i| eps[i - 1] + cartan.pairing(&wt, i)).collect();
        CrystalStats { wt, eps, phi }
    }

    /// Crystal axiom `φ_i = ε_i + ⟨wt, h_i⟩` for every finite `ε_i`.
    pub fn axiom_holds(&self, cartan: &Cartan) -> bool {
        cartan.indices().all(|i| match self.eps(i) {
            Ext::NegInf => true,
            e => self.phi(i) == e + cartan.pairing(&self.wt, i),
        })
    }
}

/// Raising (`E`) or lowering (`F`) operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dir {
    E,
    F,
}

impl Dir {
    pub fn both() -> [Dir; 2] {
        [Dir::E, Dir::F]
    }

    pub fn opposite(self) -> Dir {
        match self {
            Dir::E => Dir::F,
            Dir::F => Dir::E,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
    Dot,
}

/// Result of [`signature_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub eps: u32,
    pub phi: u32,
    /// Position where `ẽ` acts: the leftmost surviving `−`.
    pub e_pos: Option<usize>,
    /// Position where `f̃` acts: the rightmost surviving `+`.
    pub f_pos: Option<usize>,
}

/// Cancel `(−,+)` pairs (a `−` to the left of a `+`) until the word reads
/// `+⋯+−⋯−`. The word lists tensor factors from the last one to the first,
/// so the leftmost surviving `−` belongs to the rightmost factor carrying one.
pub fn signature_reduce(word: &[Sign]) -> Signature {
    let mut minus: Vec<usize> = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for (k, s) in word.iter().enumerate() {
        match s {
            Sign::Minus => minus.push(k),
            Sign::Plus => {
                if minus.pop().is_none() {
                    plus.push(k);
                }
            }
            Sign::Dot => {}
        }
    }
    Signature {
        eps: minus.len() as u32,
        phi: plus.len() as u32,
        e_pos: minus.first().copied(),
        f_pos: plus.last().copied(),
    }
}

/// Routing through a tensor product `b_1 ⊗ ⋯ ⊗ b_r` given `(ε_i, φ_i)` of
/// each factor in tensor order. Returns `(ε, φ, acting factor)`.
pub fn route(factors: &[(u32, u32)], dir: Dir) -> (u32, u32, Option<usize>) {
    let mut word = Vec::new();
    let mut owner = Vec::new();
    for (k, &(e, p)) in factors.iter().enumerate().rev() {
        for _ in 0..p {
            word.push(Sign::Plus);
            owner.push(k);
        }
        for _ in 0..e {
            word.push(Sign::Minus);
            owner.push(k);
        }
    }
    let sig = signature_reduce(&word);
    let pos = match dir {
        Dir::E => sig.e_pos,
        Dir::F => sig.f_pos,
    };
    (sig.eps, sig.phi, pos.map(|p| owner[p]))
}

/// Stats of `b_1 ⊗ b_2` at a single index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorStats {
    pub eps: Ext,
    pub phi: Ext,
    pub e_left: bool,
    pub f_left: bool,
}

/// Tensor product rule at index `i`.
pub fn tensor_stats(cartan: &Cartan, s1: &CrystalStats, s2: &CrystalStats, i: usize) -> TensorStats {
    let (e1, p1) = (s1.eps(i), s1.phi(i));
    let (e2, p2) = (s2.eps(i), s2.phi(i));
    TensorStats {
        eps: e1.max(e2 - cartan.pairing(&s1.wt, i)),
        phi: (p1 + cartan.pairing(&s2.wt, i)).max(p2),
        e_left: p1 >= e2,
        f_left: p1 > e2,
    }
}

/// Full stats of `b_1 ⊗ b_2`.
pub fn tensor(cartan: &Cartan, s1: &CrystalStats, s2: &CrystalStats) -> CrystalStats {
    let mut eps = Vec::with_capacity(cartan.n);
    let mut phi = Vec::with_capacity(cartan.n);
    for i in cartan.indices() {
        let t = tensor_stats(cartan, s1, s2, i);
        eps.push(t.eps);
        phi.push(t.phi);
    }
    CrystalStats { wt: &s1.wt + &s2.wt, eps, phi }
}

/// A crystal given by explicit operators on a concrete element type.
pub trait Crystal {
    type Elem: Clone + Eq + Hash + fmt::Debug;

    fn cartan(&self) -> Cartan;

    fn stats(&self, b: &Self::Elem) -> CrystalStats;

    fn step(&self, b: &Self::Elem, i: usize, dir: Dir) -> Option<Self::Elem>;

    fn label(&self, b: &Self::Elem) -> String {
        format!("{b:?}")
    }
}

/// `B ⊗ T_μ`, with elements written as elements of `B`.
pub struct Shifted<'a, C: Crystal> {
    pub inner: &'a C,
    pub mu: HalfWeight,
}

impl<'a, C: Crystal> Shifted<'a, C> {
    pub fn new(inner: &'a C, mu: HalfWeight) -> Self {
        Shifted { inner, mu }
    }
}

impl<C: Crystal> Crystal for Shifted<'_, C> {
    type Elem = C::Elem;

    fn cartan(&self) -> Cartan {
        self.inner.cartan()
    }

    fn stats(&self, b: &C::Elem) -> CrystalStats {
        let cartan = self.inner.cartan();
        tensor(&cartan, &self.inner.stats(b), &CrystalStats::t_mu(self.mu.clone()))
    }

    fn step(&self, b: &C::Elem, i: usize, dir: Dir) -> Option<C::Elem> {
        self.inner.step(b, i, dir)
    }

    fn label(&self, b: &C::Elem) -> String {
        self.inner.label(b)
    }
}

/// Finite crystal graph; node 0 is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph<E> {
    pub nodes: Vec<E>,
    /// `(source, i, target)` meaning `f̃_i(source) = target`.
    pub edges: Vec<(usize, usize, usize)>,
    pub root: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct GraphOptions {
    pub cap: usize,
    pub max_depth: Option<usize>,
    pub lowering_only: bool,
}

impl Default for GraphOptions {
    fn default() -> Self {
        GraphOptions { cap: 1_000_000, max_depth: None, lowering_only: false }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("node cap of {0} exceeded")]
    CapExceeded(usize),
}

/// Breadth-first closure of `seed` under the operators, visiting labels in
/// increasing order with `f̃` before `ẽ`.
pub fn generate_graph<C: Crystal>(
    model: &C,
    seed: C::Elem,
    opts: GraphOptions,
) -> Result<CrystalGraph<C::Elem>, GraphError> {
    let n = model.cartan().n;
    let mut index: HashMap<C::Elem, usize> = HashMap::new();
    let mut nodes = vec![seed.clone()];
    let mut depth = vec![0usize];
    index.insert(seed, 0);
    if opts.cap == 0 {
        return Err(GraphError::CapExceeded(0));
    }
    let mut queue = VecDeque::from([0usize]);
    let dirs: &[Dir] = if opts.lowering_only { &[Dir::F] } else { &[Dir::F, Dir::E] };
    while let Some(k) = queue.pop_front() {
        if opts.max_depth.is_some_and(|d| depth[k] >= d) {
            continue;
        }
        for i in 1..=n {
            for &dir in dirs {
                if let Some(b) = model.step(&nodes[k], i, dir) {
                    if !index.contains_key(&b) {
                        if nodes.len() >= opts.cap {
                            return Err(GraphError::CapExceeded(opts.cap));
                        }
                        index.insert(b.clone(), nodes.len());
                        depth.push(depth[k] + 1);
                        queue.push_back(nodes.len());
                        nodes.push(b);
                    }
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (k, b) in nodes.iter().enumerate() {
        for i in 1..=n {
            if let Some(t) = model.step(b, i, Dir::F).and_then(|t| index.get(&t).copied()) {
                edges.push((k, i, t));
            }
        }
    }
    Ok(CrystalGraph { nodes, edges, root: 0 })
}

impl<E> CrystalGraph<E> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Structural equality of two graphs produced by [`generate_graph`].
    pub fn same_shape<F>(&self, other: &CrystalGraph<F>) -> bool {
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        self.nodes.len() == other.nodes.len() && a == b
    }

    /// DOT rendering with one node per element and `i`-labelled edges.
    pub fn to_dot(&self, label: impl Fn(&E) -> String) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, b) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{k} [label={:?}];\n", label(b)));
        }
        for (s, i, t) in &self.edges {
            out.push_str(&format!("  n{s} -> n{t} [label=\"{i}\"];\n"));
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering `{"nodes":[…],"edges":[[s,i,t],…],"root":0}`.
    pub fn to_json(&self, node: impl Fn(&E) -> serde_json::Value) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.nodes.iter().map(node).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|(s, i, t)| vec![*s, *i, *t]).collect::<Vec<_>>(),
            "root": self.root,
        })
    }

    /// Checks the local axioms on every node; returns violations.
    pub fn check_axioms<C: Crystal<Elem = E>>(&self, model: &C) -> Vec<String>
    where
        E: Clone + Eq + Hash + fmt::Debug,
    {
        let cartan = model.cartan();
        let mut bad = Vec::new();
        for b in &self.nodes {
            let s = model.stats(b);
            if !s.axiom_holds(&cartan) {
                bad.push(format!("phi != eps + <wt,h> at {}", model.label(b)));
            }
            if !cartan.pairing_is_integral(&s.wt) {
                bad.push(format!("non-integral pairing at {}", model.label(b)));
            }
            for i in cartan.indices() {
                for dir in Dir::both() {
                    if let Some(c) = model.step(b, i, dir) {
                        if model.step(&c, i, dir.opposite()).as_ref() != Some(b) {
                            bad.push(format!("inverse fails at {} i={i} {dir:?}", model.label(b)));
                        }
                        let t = model.stats(&c);
                        let (de, dw) = match dir {
                            Dir::F => (1, -1),
                            Dir::E => (-1, 1),
                        };
                        let expect_wt = &s.wt + &cartan.alpha(i).scale(dw);
                        if t.wt != expect_wt || t.eps(i) != s.eps(i) + de || t.phi(i) != s.phi(i) - de {
                            bad.push(format!("stat shift fails at {} i={i} {dir:?}", model.label(b)));
                        }
                    } else {
                        let zero = match dir {
                            Dir::E => s.eps(i),
                            Dir::F => s.phi(i),
                        };
                        if zero != Ext::Fin(0) && zero != Ext::NegInf {
                            bad.push(format!(
                                "operator undefined but string length {zero} at {} i={i} {dir:?}",
                                model.label(b)
                            ));
                        }
                    }
                }
            }
        }
        bad
    }
}

/// Outcome of [`check_morphism`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorphismReport {
    pub nodes_checked: usize,
    pub violations: Vec<String>,
}

impl MorphismReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies that `map` preserves weight, `ε_i`, `φ_i`, commutes with every
/// defined operator on `nodes`, and is injective on `nodes`.
pub fn check_morphism<D, T, M>(domain: &D, nodes: &[D::Elem], map: M, codomain: &T) -> MorphismReport
where
    D: Crystal,
    T: Crystal,
    M: Fn(&D::Elem) -> T::Elem,
{
    let cartan = domain.cartan();
    let mut report = MorphismReport::default();
    let mut seen: HashSet<T::Elem> = HashSet::new();
    for b in nodes {
        report.nodes_checked += 1;
        let img = map(b);
        if !seen.insert(img.clone()) {
            report.violations.push(format!("not injective at {}", domain.label(b)));
        }
        let s = domain.stats(b);
        let t = codomain.stats(&img);
        if s != t {
            report.violations.push(format!(
                "stats differ at {}: wt {} vs {}, eps {:?} vs {:?}, phi {:?} vs {:?}",
                domain.label(b),
                s.wt,
                t.wt,
                s.eps,
                t.eps,
                s.phi,
                t.phi
            ));
        }
        for i in cartan.indices() {
            for dir in Dir::both() {
                if let Some(c) = domain.step(b, i, dir) {
                    if codomain.step(&img, i, dir) != Some(map(&c)) {
                        report.violations.push(format!("does not commute with {dir:?}_{i} at {}", domain.label(b)));
                    }
                }
            }
        }
    }
    report
}
