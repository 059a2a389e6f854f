//! Finite groups from a catalog of families or from explicit permutation
//! generators.
//!
//! Every group is realized concretely as a set of permutations closed under
//! composition. Elements are indexed `0..order` in deterministic breadth-first
//! closure order (generators in spec order, words explored shortest-first,
//! ties by generator index), with index 0 the identity. Families:
//!
//! * `C<n>` cyclic, `D<n>` dihedral of order `2n`, `Q<n>` generalized
//!   quaternion of order `4n` (via its regular action),
//! * `E<p>_<k>` elementary abelian `p^k`, `S<n>` symmetric, `A<n>` alternating,
//! * `PSL2_<p>` as fractional-linear maps on the projective line over `F_p`,
//! * `X(<spec>,<spec>)` direct products acting on disjoint point sets.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::arith::is_prime;

/// Groups larger than this are multiplied by composing permutations instead
/// of a cached table.
const TABLE_CAP: usize = 2048;

/// Default ceiling on generator-closure size.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("cannot parse group spec '{spec}': {reason}")]
    Parse { spec: String, reason: String },
    #[error("generator closure exceeded the cap of {0} elements")]
    ClosureCap(usize),
    #[error("bad generators: {0}")]
    BadGenerators(String),
}

/// A catalog group family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Dihedral(u64),
    GeneralizedQuaternion(u64),
    ElementaryAbelian { p: u64, k: u32 },
    Symmetric(u64),
    Alternating(u64),
    Psl2(u64),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    /// Parses the spec grammar: `C<n>`, `D<n>`, `Q<n>`, `E<p>_<k>`, `S<n>`,
    /// `A<n>`, `PSL2_<p>`, `X(<spec>,<spec>)`.
    pub fn parse(input: &str) -> Result<GroupSpec, GroupError> {
        let s = input.trim();
        let err = |reason: &str| GroupError::Parse {
            spec: input.to_string(),
            reason: reason.to_string(),
        };
        let number = |digits: &str, what: &str| -> Result<u64, GroupError> {
            digits
                .parse::<u64>()
                .map_err(|_| err(&format!("expected an integer {what}")))
        };

        if let Some(rest) = s.strip_prefix("PSL2_") {
            let p = number(rest, "prime p")?;
            if !is_prime(p) || !(5..=13).contains(&p) {
                return Err(err("PSL2_<p> requires a prime p with 5 <= p <= 13"));
            }
            return Ok(GroupSpec::Psl2(p));
        }
        if let Some(rest) = s.strip_prefix('X') {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| err("product form is X(<spec>,<spec>)"))?;
            // Split on the top-level comma only; factors may nest.
            let mut depth = 0usize;
            let mut split = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let at = split.ok_or_else(|| err("product form is X(<spec>,<spec>)"))?;
            let left = GroupSpec::parse(&inner[..at])?;
            let right = GroupSpec::parse(&inner[at + 1..])?;
            let spec = GroupSpec::Product(Box::new(left), Box::new(right));
            if spec.order() > DEFAULT_CLOSURE_CAP as u64 {
                return Err(err("product order exceeds 10000"));
            }
            return Ok(spec);
        }
        if let Some(rest) = s.strip_prefix('E') {
            let (p_str, k_str) = rest
                .split_once('_')
                .ok_or_else(|| err("elementary abelian form is E<p>_<k>"))?;
            let p = number(p_str, "prime p")?;
            let k = number(k_str, "rank k")? as u32;
            if !is_prime(p) {
                return Err(err("E<p>_<k> requires p prime"));
            }
            if k == 0 || p.checked_pow(k).is_none_or(|o| o > 2048) {
                return Err(err("E<p>_<k> requires k >= 1 and p^k <= 2048"));
            }
            return Ok(GroupSpec::ElementaryAbelian { p, k });
        }
        let (family, rest) = s.split_at(if s.is_empty() { 0 } else { 1 });
        let spec = match family {
            "C" => {
                let n = number(rest, "n")?;
                if !(2..=2048).contains(&n) {
                    return Err(err("C<n> requires 2 <= n <= 2048"));
                }
                GroupSpec::Cyclic(n)
            }
            "D" => {
                let n = number(rest, "n")?;
                if !(3..=2048).contains(&n) {
                    return Err(err("D<n> requires 3 <= n <= 2048"));
                }
                GroupSpec::Dihedral(n)
            }
            "Q" => {
                let n = number(rest, "n")?;
                if !(2..=512).contains(&n) {
                    return Err(err("Q<n> requires 2 <= n <= 512"));
                }
                GroupSpec::GeneralizedQuaternion(n)
            }
            "S" => {
                let n = number(rest, "n")?;
                if !(2..=7).contains(&n) {
                    return Err(err("S<n> requires 2 <= n <= 7"));
                }
                GroupSpec::Symmetric(n)
            }
            "A" => {
                let n = number(rest, "n")?;
                if !(3..=7).contains(&n) {
                    return Err(err("A<n> requires 3 <= n <= 7"));
                }
                GroupSpec::Alternating(n)
            }
            _ => return Err(err("unknown family tag (expected C, D, Q, E, S, A, PSL2 or X)")),
        };
        Ok(spec)
    }

    /// The advertised order of the group.
    pub fn order(&self) -> u64 {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Dihedral(n) => 2 * n,
            GroupSpec::GeneralizedQuaternion(n) => 4 * n,
            GroupSpec::ElementaryAbelian { p, k } => p.pow(*k),
            GroupSpec::Symmetric(n) => (1..=*n).product(),
            GroupSpec::Alternating(n) => (1..=*n).product::<u64>() / 2,
            GroupSpec::Psl2(p) => p * (p - 1) * (p + 1) / 2,
            GroupSpec::Product(a, b) => a.order() * b.order(),
        }
    }

    /// Catalog metadata: the families known to be simple (never computed).
    pub fn is_simple_flagged(&self) -> bool {
        match self {
            GroupSpec::Alternating(n) => *n >= 5,
            GroupSpec::Psl2(p) => *p >= 5,
            _ => false,
        }
    }

    /// True for `C<p>` with `p` prime, the one family with a closed-form
    /// lambda number different from the group order.
    pub fn is_cyclic_prime(&self) -> bool {
        matches!(self, GroupSpec::Cyclic(n) if is_prime(*n))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::GeneralizedQuaternion(n) => write!(f, "Q{n}"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "E{p}_{k}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Psl2(p) => write!(f, "PSL2_{p}"),
            GroupSpec::Product(a, b) => write!(f, "X({a},{b})"),
        }
    }
}

type Perm = Vec<u16>;

fn compose(outer: &[u16], inner: &[u16]) -> Perm {
    inner.iter().map(|&x| outer[x as usize]).collect()
}

fn invert(p: &[u16]) -> Perm {
    let mut inv = vec![0u16; p.len()];
    for (i, &img) in p.iter().enumerate() {
        inv[img as usize] = i as u16;
    }
    inv
}

fn identity_perm(degree: usize) -> Perm {
    (0..degree as u16).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Order of a permutation: lcm of its cycle lengths.
fn perm_order(p: &[u16]) -> u64 {
    let mut seen = vec![false; p.len()];
    let mut result = 1u64;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        result = lcm(result, len);
    }
    result
}

fn cycle_notation(p: &[u16], labels: &[String]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|&v| labels[v].clone())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// How element display names are derived for a family.
enum Namer {
    /// Rotations `x -> x + c` named `a^c`.
    CyclicWord,
    /// Rotations `a^c`, reflections `x -> c - x` named `a^c b`.
    DihedralWord { n: u64 },
    /// Regular action: the image of the identity point is the element's word.
    RegularWord { words: Vec<String> },
    /// Cycle notation over per-point labels.
    Cycles { labels: Vec<String> },
}

impl Namer {
    fn name(&self, p: &[u16]) -> String {
        match self {
            Namer::CyclicWord => word_power(p[0] as u64, false),
            Namer::DihedralWord { n } => {
                let c = p[0] as u64;
                let rotation = (0..p.len()).all(|x| p[x] as u64 == (x as u64 + c) % n);
                word_power(c, !rotation)
            }
            Namer::RegularWord { words } => words[p[0] as usize].clone(),
            Namer::Cycles { labels } => cycle_notation(p, labels),
        }
    }
}

/// `a^c` or `a^c b`, with the usual abbreviations for c = 0, 1.
fn word_power(c: u64, with_b: bool) -> String {
    match (c, with_b) {
        (0, false) => "e".to_string(),
        (1, false) => "a".to_string(),
        (_, false) => format!("a^{c}"),
        (0, true) => "b".to_string(),
        (1, true) => "a b".to_string(),
        (_, true) => format!("a^{c} b"),
    }
}

fn decimal_labels(degree: usize) -> Vec<String> {
    (0..degree).map(|i| i.to_string()).collect()
}

/// A finite group over indexed elements; index 0 is the identity.
pub struct FiniteGroup {
    label: String,
    perms: Vec<Perm>,
    index: HashMap<Perm, usize>,
    orders: Vec<u64>,
    names: Vec<String>,
    inverses: Vec<usize>,
    table: Option<Vec<u16>>,
    simple_flag: bool,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.order())
    }
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_simple_flagged(&self) -> bool {
        self.simple_flag
    }

    /// Product of elements `i * j` (the permutation of `j` applied first).
    pub fn multiply(&self, i: usize, j: usize) -> usize {
        match &self.table {
            Some(t) => t[i * self.perms.len() + j] as usize,
            None => self.index[&compose(&self.perms[i], &self.perms[j])],
        }
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Order of element `i`: the least `m >= 1` with `i^m` the identity.
    pub fn element_order(&self, i: usize) -> u64 {
        self.orders[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// `g^m` by binary exponentiation; `m = 0` gives the identity.
    pub fn power(&self, g: usize, m: u64) -> usize {
        let mut result = 0usize;
        let mut base = g;
        let mut m = m;
        while m > 0 {
            if m & 1 == 1 {
                result = self.multiply(result, base);
            }
            base = self.multiply(base, base);
            m >>= 1;
        }
        result
    }

    /// The members of `<g>`: `g^1, g^2, ..., g^|g| = e` in power order.
    pub fn cyclic_subgroup(&self, g: usize) -> Vec<usize> {
        let mut members = Vec::new();
        let mut x = g;
        loop {
            members.push(x);
            if x == 0 {
                return members;
            }
            x = self.multiply(x, g);
        }
    }

    fn from_generators(
        label: String,
        degree: usize,
        generators: &[Perm],
        namer: Namer,
        cap: usize,
        simple_flag: bool,
    ) -> Result<FiniteGroup, GroupError> {
        for g in generators {
            if g.len() != degree {
                return Err(GroupError::BadGenerators(format!(
                    "generator degree {} differs from {}",
                    g.len(),
                    degree
                )));
            }
            let mut hit = vec![false; degree];
            for &img in g {
                if (img as usize) >= degree || hit[img as usize] {
                    return Err(GroupError::BadGenerators(
                        "not a bijection on the domain".to_string(),
                    ));
                }
                hit[img as usize] = true;
            }
        }

        // Deterministic BFS closure: identity first, then right-multiply
        // queue elements by generators in spec order.
        let mut perms = vec![identity_perm(degree)];
        let mut index = HashMap::new();
        index.insert(perms[0].clone(), 0usize);
        let mut head = 0usize;
        while head < perms.len() {
            for gen in generators {
                let next = compose(&perms[head], gen);
                if !index.contains_key(&next) {
                    if perms.len() >= cap {
                        return Err(GroupError::ClosureCap(cap));
                    }
                    index.insert(next.clone(), perms.len());
                    perms.push(next);
                }
            }
            head += 1;
        }

        let orders: Vec<u64> = perms.iter().map(|p| perm_order(p)).collect();
        let names: Vec<String> = perms.iter().map(|p| namer.name(p)).collect();
        let inverses: Vec<usize> = perms.iter().map(|p| index[&invert(p)]).collect();
        let n = perms.len();
        let table = (n <= TABLE_CAP).then(|| {
            let mut t = vec![0u16; n * n];
            for i in 0..n {
                for j in 0..n {
                    t[i * n + j] = index[&compose(&perms[i], &perms[j])] as u16;
                }
            }
            t
        });

        Ok(FiniteGroup {
            label,
            perms,
            index,
            orders,
            names,
            inverses,
            table,
            simple_flag,
        })
    }
}

/// Generator permutations, point count and namer for a catalog family.
fn family_generators(spec: &GroupSpec) -> (Vec<Perm>, usize, Namer) {
    match spec {
        GroupSpec::Cyclic(n) => {
            let n = *n as usize;
            let rot: Perm = (0..n).map(|x| ((x + 1) % n) as u16).collect();
            (vec![rot], n, Namer::CyclicWord)
        }
        GroupSpec::Dihedral(n) => {
            let m = *n as usize;
            let rot: Perm = (0..m).map(|x| ((x + 1) % m) as u16).collect();
            let refl: Perm = (0..m).map(|x| ((m - x) % m) as u16).collect();
            (vec![rot, refl], m, Namer::DihedralWord { n: *n })
        }
        GroupSpec::GeneralizedQuaternion(n) => quaternion_generators(*n as usize),
        GroupSpec::ElementaryAbelian { p, k } => {
            let p = *p as usize;
            let k = *k as usize;
            let degree = p * k;
            let gens: Vec<Perm> = (0..k)
                .map(|block| {
                    (0..degree)
                        .map(|x| {
                            if x / p == block {
                                (block * p + (x % p + 1) % p) as u16
                            } else {
                                x as u16
                            }
                        })
                        .collect()
                })
                .collect();
            (
                gens,
                degree,
                Namer::Cycles {
                    labels: decimal_labels(degree),
                },
            )
        }
        GroupSpec::Symmetric(n) => {
            let n = *n as usize;
            let cycle: Perm = (0..n).map(|x| ((x + 1) % n) as u16).collect();
            let mut swap = identity_perm(n);
            if n >= 2 {
                swap.swap(0, 1);
            }
            (
                vec![cycle, swap],
                n,
                Namer::Cycles {
                    labels: decimal_labels(n),
                },
            )
        }
        GroupSpec::Alternating(n) => {
            let n = *n as usize;
            let mut three = identity_perm(n);
            three[0] = 1;
            three[1] = 2;
            three[2] = 0;
            let long: Perm = if n % 2 == 1 {
                // odd n: the n-cycle is even
                (0..n).map(|x| ((x + 1) % n) as u16).collect()
            } else {
                // even n: the (n-1)-cycle on points 1.. is even
                (0..n)
                    .map(|x| {
                        if x == 0 {
                            0
                        } else {
                            (x % (n - 1) + 1) as u16
                        }
                    })
                    .collect()
            };
            (
                vec![three, long],
                n,
                Namer::Cycles {
                    labels: decimal_labels(n),
                },
            )
        }
        GroupSpec::Psl2(p) => psl2_generators(*p),
        GroupSpec::Product(a, b) => {
            let (ga, da, _) = family_generators(a);
            let (gb, db, _) = family_generators(b);
            let degree = da + db;
            let mut gens = Vec::with_capacity(ga.len() + gb.len());
            for g in ga {
                let mut ext = identity_perm(degree);
                ext[..da].copy_from_slice(&g);
                gens.push(ext);
            }
            for g in gb {
                let mut ext = identity_perm(degree);
                for (x, &img) in g.iter().enumerate() {
                    ext[da + x] = da as u16 + img;
                }
                gens.push(ext);
            }
            (
                gens,
                degree,
                Namer::Cycles {
                    labels: decimal_labels(degree),
                },
            )
        }
    }
}

/// Q_{4n} through its regular action on the 4n words `a^i b^j`
/// (0 <= i < 2n, j in {0,1}), using b^2 = a^n and b a = a^{-1} b.
fn quaternion_generators(n: usize) -> (Vec<Perm>, usize, Namer) {
    let two_n = 2 * n;
    let degree = 4 * n;
    let word = |i: usize, j: usize| -> usize { j * two_n + i };
    let mul_a = |i: usize, j: usize| -> (usize, usize) {
        // a * a^i b^j; for j = 1, a a^i b = a^{i+1} b.
        ((i + 1) % two_n, j)
    };
    let mul_b = |i: usize, j: usize| -> (usize, usize) {
        // b * a^i b^j = a^{-i} b^{1+j}; b^2 collapses to a^n.
        let base = (two_n - i) % two_n;
        if j == 0 {
            (base, 1)
        } else {
            ((base + n) % two_n, 0)
        }
    };
    let perm_of = |f: &dyn Fn(usize, usize) -> (usize, usize)| -> Perm {
        let mut p = vec![0u16; degree];
        for i in 0..two_n {
            for j in 0..2 {
                let (i2, j2) = f(i, j);
                p[word(i, j)] = word(i2, j2) as u16;
            }
        }
        p
    };
    let words: Vec<String> = (0..degree)
        .map(|w| word_power((w % two_n) as u64, w / two_n == 1))
        .collect();
    (
        vec![perm_of(&mul_a), perm_of(&mul_b)],
        degree,
        Namer::RegularWord { words },
    )
}

/// PSL(2,p) acting on the projective line {0, ..., p-1, inf}, generated by
/// x -> x + 1 and x -> -1/x.
fn psl2_generators(p: u64) -> (Vec<Perm>, usize, Namer) {
    let p = p as usize;
    let degree = p + 1; // point p is the point at infinity
    let inf = p;
    let translate: Perm = (0..degree)
        .map(|x| if x == inf { inf as u16 } else { ((x + 1) % p) as u16 })
        .collect();
    let modpow = |mut base: u64, mut exp: u64, m: u64| -> u64 {
        let mut acc = 1u64;
        base %= m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc
    };
    let negate_invert: Perm = (0..degree)
        .map(|x| {
            if x == inf {
                0u16
            } else if x == 0 {
                inf as u16
            } else {
                let inv = modpow(x as u64, p as u64 - 2, p as u64);
                ((p as u64 - inv) % p as u64) as u16
            }
        })
        .collect();
    let mut labels = decimal_labels(degree);
    labels[inf] = "inf".to_string();
    (vec![translate, negate_invert], degree, Namer::Cycles { labels })
}

/// Builds a catalog group. The constructed order always matches the
/// advertised one; this is asserted.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
    let (gens, degree, namer) = family_generators(spec);
    let group = FiniteGroup::from_generators(
        spec.to_string(),
        degree,
        &gens,
        namer,
        DEFAULT_CLOSURE_CAP,
        spec.is_simple_flagged(),
    )?;
    assert_eq!(
        group.order() as u64,
        spec.order(),
        "catalog construction for {spec} produced the wrong order"
    );
    Ok(group)
}

/// Convenience: parse a spec string and build the group.
pub fn build_from_str(spec: &str) -> Result<(GroupSpec, FiniteGroup), GroupError> {
    let spec = GroupSpec::parse(spec)?;
    let group = build_group(&spec)?;
    Ok((spec, group))
}

/// The subgroup generated by arbitrary permutations of a common domain,
/// enumerated in BFS order with the default size cap.
pub fn close_generators(perms: &[Vec<u16>]) -> Result<FiniteGroup, GroupError> {
    close_generators_with_cap(perms, DEFAULT_CLOSURE_CAP)
}

pub fn close_generators_with_cap(
    perms: &[Vec<u16>],
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    let degree = perms.first().map_or(1, |p| p.len());
    let labels = decimal_labels(degree);
    let group = FiniteGroup::from_generators(
        String::new(),
        degree,
        perms,
        Namer::Cycles { labels },
        cap,
        false,
    )?;
    Ok(FiniteGroup {
        label: format!("closure:{}", group.order()),
        ..group
    })
}
