//! Seedable model-network generators: Erdős–Rényi, Watts–Strogatz,
//! Barabási–Albert and zero-temperature hyperbolic random geometric graphs.
//!
//! Every generator draws from its own `ChaCha8Rng` seeded from the spec, so
//! the same spec always yields the same edge list.

use std::collections::{BTreeSet, HashMap};
use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Er,
    Ws,
    Ba,
    Hgg,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "er" => Ok(Family::Er),
            "ws" => Ok(Family::Ws),
            "ba" => Ok(Family::Ba),
            "hgg" => Ok(Family::Hgg),
            other => Err(Error::invalid("family", format!("unknown family `{other}` (expected er, ws, ba or hgg)"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Er => "er",
            Family::Ws => "ws",
            Family::Ba => "ba",
            Family::Hgg => "hgg",
        })
    }
}

/// Parameters of one model network. Only the fields relevant to `family`
/// are read; see [`GeneratorSpec::validate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    /// ER edge probability.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    /// WS rewiring probability.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    /// WS ring-neighbour count (total, both sides) or HGG target mean degree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    /// BA edges per arriving vertex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// BA seed clique size; defaults to `m`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m0: Option<usize>,
    /// HGG power-law exponent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    /// HGG temperature; only 0 is supported.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub temperature: Option<f64>,
    pub seed: u64,
}

impl GeneratorSpec {
    fn blank(family: Family, n: usize, seed: u64) -> Self {
        GeneratorSpec {
            family,
            n,
            p: None,
            beta: None,
            k: None,
            m: None,
            m0: None,
            gamma: None,
            temperature: None,
            seed,
        }
    }

    pub fn er(n: usize, p: f64, seed: u64) -> Self {
        GeneratorSpec { p: Some(p), ..Self::blank(Family::Er, n, seed) }
    }

    pub fn ws(n: usize, k: usize, beta: f64, seed: u64) -> Self {
        GeneratorSpec {
            k: Some(k as f64),
            beta: Some(beta),
            ..Self::blank(Family::Ws, n, seed)
        }
    }

    pub fn ba(n: usize, m: usize, seed: u64) -> Self {
        GeneratorSpec { m: Some(m), ..Self::blank(Family::Ba, n, seed) }
    }

    pub fn hgg(n: usize, k: f64, gamma: f64, seed: u64) -> Self {
        GeneratorSpec {
            k: Some(k),
            gamma: Some(gamma),
            temperature: Some(0.0),
            ..Self::blank(Family::Hgg, n, seed)
        }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        GeneratorSpec { seed, ..self.clone() }
    }

    fn require_f64(value: Option<f64>, field: &'static str) -> Result<f64> {
        value.ok_or_else(|| Error::invalid(field, "missing"))
    }

    fn probability(value: Option<f64>, field: &'static str) -> Result<f64> {
        let p = Self::require_f64(value, field)?;
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::invalid(field, format!("must lie in [0, 1], got {p}")));
        }
        Ok(p)
    }

    fn ws_k(&self) -> Result<usize> {
        let k = Self::require_f64(self.k, "k")?;
        if k.fract() != 0.0 || k < 0.0 {
            return Err(Error::invalid("k", format!("must be a nonnegative integer, got {k}")));
        }
        let k = k as usize;
        if !k.is_multiple_of(2) {
            return Err(Error::invalid("k", format!("must be even, got {k}")));
        }
        if k >= self.n {
            return Err(Error::invalid("k", format!("must be smaller than n={}, got {k}", self.n)));
        }
        Ok(k)
    }

    fn ba_m(&self) -> Result<(usize, usize)> {
        let m = self.m.ok_or_else(|| Error::invalid("m", "missing"))?;
        let m0 = self.m0.unwrap_or(m);
        if m < 1 {
            return Err(Error::invalid("m", "must be at least 1"));
        }
        if m0 < m {
            return Err(Error::invalid("m0", format!("must be >= m={m}, got {m0}")));
        }
        if m0 >= self.n {
            return Err(Error::invalid("m0", format!("must be smaller than n={}, got {m0}", self.n)));
        }
        Ok((m, m0))
    }

    fn hgg_params(&self) -> Result<(f64, f64)> {
        let k = Self::require_f64(self.k, "k")?;
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::invalid("k", format!("target mean degree must be positive, got {k}")));
        }
        let gamma = self.gamma.unwrap_or(2.0);
        if !(gamma >= 2.0 && gamma.is_finite()) {
            return Err(Error::invalid("gamma", format!("must be >= 2, got {gamma}")));
        }
        let t = self.temperature.unwrap_or(0.0);
        if t < 0.0 {
            return Err(Error::invalid("temperature", format!("must be >= 0, got {t}")));
        }
        if t != 0.0 {
            return Err(Error::Unsupported {
                field: "temperature",
                reason: format!("only T = 0 is implemented, got {t}"),
            });
        }
        Ok((k, gamma))
    }

    /// Checks the parameters used by `family`, naming the first bad field.
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::invalid("n", "must be at least 1"));
        }
        match self.family {
            Family::Er => Self::probability(self.p, "p").map(drop),
            Family::Ws => {
                self.ws_k()?;
                Self::probability(self.beta, "beta").map(drop)
            }
            Family::Ba => self.ba_m().map(drop),
            Family::Hgg => self.hgg_params().map(drop),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        match self.family {
            Family::Er => Ok(generate_er(self.n, self.p.unwrap(), self.seed)),
            Family::Ws => Ok(generate_ws(self.n, self.ws_k()?, self.beta.unwrap(), self.seed)),
            Family::Ba => {
                let (m, m0) = self.ba_m()?;
                Ok(generate_ba(self.n, m, m0, self.seed))
            }
            Family::Hgg => {
                let (k, gamma) = self.hgg_params()?;
                generate_hgg(self.n, k, gamma, self.temperature.unwrap_or(0.0), self.seed)
            }
        }
    }

    /// Parses `key=value` tokens, e.g. `family=ws n=1000 k=10 beta=0.5 seed=7`.
    /// For WS, `p` is accepted as an alias of `beta`.
    pub fn parse_kv<'a>(tokens: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut fields: HashMap<String, String> = HashMap::new();
        for tok in tokens {
            for part in tok.split_whitespace() {
                let (key, value) = part
                    .split_once('=')
                    .ok_or_else(|| Error::invalid("spec", format!("expected key=value, got `{part}`")))?;
                fields.insert(key.trim().to_ascii_lowercase(), value.trim().to_string());
            }
        }
        let family: Family = fields
            .remove("family")
            .ok_or_else(|| Error::invalid("family", "missing"))?
            .parse()?;
        let take_f64 = |fields: &mut HashMap<String, String>, key: &'static str| -> Result<Option<f64>> {
            fields
                .remove(key)
                .map(|v| v.parse::<f64>().map_err(|_| Error::invalid(key, format!("`{v}` is not a number"))))
                .transpose()
        };
        let take_usize = |fields: &mut HashMap<String, String>, key: &'static str| -> Result<Option<usize>> {
            fields
                .remove(key)
                .map(|v| v.parse::<usize>().map_err(|_| Error::invalid(key, format!("`{v}` is not a nonnegative integer"))))
                .transpose()
        };
        let n = take_usize(&mut fields, "n")?.ok_or_else(|| Error::invalid("n", "missing"))?;
        let seed = fields
            .remove("seed")
            .map(|v| v.parse::<u64>().map_err(|_| Error::invalid("seed", format!("`{v}` is not a nonnegative integer"))))
            .transpose()?
            .unwrap_or(0);
        let mut spec = Self::blank(family, n, seed);
        spec.p = take_f64(&mut fields, "p")?;
        spec.beta = take_f64(&mut fields, "beta")?;
        if family == Family::Ws && spec.beta.is_none() {
            spec.beta = spec.p.take();
        }
        spec.k = take_f64(&mut fields, "k")?;
        spec.m = take_usize(&mut fields, "m")?;
        spec.m0 = take_usize(&mut fields, "m0")?;
        spec.gamma = take_f64(&mut fields, "gamma")?;
        spec.temperature = take_f64(&mut fields, "temperature")?.or(take_f64(&mut fields, "t")?);
        if let Some(key) = fields.keys().min() {
            return Err(Error::invalid("spec", format!("unknown key `{key}`")));
        }
        Ok(spec)
    }

    /// Flat `key=value` form accepted by [`GeneratorSpec::parse_kv`].
    pub fn to_kv(&self) -> String {
        let mut parts = vec![format!("family={}", self.family), format!("n={}", self.n)];
        let mut push = |key: &str, v: Option<String>| {
            if let Some(v) = v {
                parts.push(format!("{key}={v}"));
            }
        };
        push("p", self.p.map(|v| v.to_string()));
        push("k", self.k.map(|v| v.to_string()));
        push("beta", self.beta.map(|v| v.to_string()));
        push("m", self.m.map(|v| v.to_string()));
        push("m0", self.m0.map(|v| v.to_string()));
        push("gamma", self.gamma.map(|v| v.to_string()));
        push("temperature", self.temperature.map(|v| v.to_string()));
        parts.push(format!("seed={}", self.seed));
        parts.join(" ")
    }

    /// Human-readable model description without the seed.
    pub fn describe(&self) -> String {
        let n = self.n;
        match self.family {
            Family::Er => format!("ER n={n} p={}", self.p.unwrap_or(f64::NAN)),
            Family::Ws => format!("WS n={n} k={} beta={}", self.k.unwrap_or(f64::NAN), self.beta.unwrap_or(f64::NAN)),
            Family::Ba => format!("BA n={n} m={}", self.m.unwrap_or(0)),
            Family::Hgg => format!(
                "HGG n={n} k={} gamma={} T={}",
                self.k.unwrap_or(f64::NAN),
                self.gamma.unwrap_or(2.0),
                self.temperature.unwrap_or(0.0)
            ),
        }
    }
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p): every unordered pair independently with probability `p`.
pub fn generate_er(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng_for(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_simple_edges(n, edges).expect("ER edges are simple")
}

/// Watts–Strogatz: ring lattice with `k/2` neighbours per side, then each
/// lattice edge `(u, u+j)` has its far endpoint rewired with probability
/// `beta`. A rewiring that would create a self-loop or duplicate is redrawn
/// up to `n` times before the original edge is kept.
pub fn generate_ws(n: usize, k: usize, beta: f64, seed: u64) -> Graph {
    let mut rng = rng_for(seed);
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let half = k / 2;
    for j in 1..=half {
        for u in 0..n {
            let v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    for j in 1..=half {
        for u in 0..n {
            if rng.gen::<f64>() >= beta {
                continue;
            }
            let v = (u + j) % n;
            for _ in 0..n {
                let w = rng.gen_range(0..n);
                if w == u || adj[u].contains(&w) {
                    continue;
                }
                adj[u].remove(&v);
                adj[v].remove(&u);
                adj[u].insert(w);
                adj[w].insert(u);
                break;
            }
        }
    }
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)));
    Graph::from_simple_edges(n, edges).expect("WS edges are simple")
}

/// Barabási–Albert: seed clique on `m0` vertices, then each new vertex links
/// to `m` distinct existing vertices chosen with probability proportional
/// to degree.
pub fn generate_ba(n: usize, m: usize, m0: usize, seed: u64) -> Graph {
    let mut rng = rng_for(seed);
    let mut edges = Vec::with_capacity(m0 * (m0.saturating_sub(1)) / 2 + (n - m0) * m);
    // every edge endpoint, once per incidence: uniform draws are degree-proportional
    let mut endpoints: Vec<usize> = Vec::new();
    for u in 0..m0 {
        for v in (u + 1)..m0 {
            edges.push((u, v));
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    for v in m0..n {
        chosen.clear();
        if v == m {
            chosen.extend(0..v);
        } else if endpoints.is_empty() {
            while chosen.len() < m {
                let t = rng.gen_range(0..v);
                if !chosen.contains(&t) {
                    chosen.push(t);
                }
            }
        } else {
            while chosen.len() < m {
                let t = endpoints[rng.gen_range(0..endpoints.len())];
                if !chosen.contains(&t) {
                    chosen.push(t);
                }
            }
        }
        for &t in &chosen {
            edges.push((t, v));
            endpoints.push(t);
            endpoints.push(v);
        }
    }
    Graph::from_simple_edges(n, edges).expect("BA edges are simple")
}

/// Point on the hyperbolic disk in native polar coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub radius: f64,
    pub angle: f64,
}

/// Inverse-CDF sample of the radial density `α sinh(αr) / (cosh(αR) − 1)`.
fn radial_quantile(u: f64, alpha: f64, disk_radius: f64) -> f64 {
    ((alpha * disk_radius).cosh() - 1.0).mul_add(u, 1.0).acosh() / alpha
}

/// Edges of the zero-temperature hyperbolic graph: `u ~ v` iff the
/// hyperbolic distance between their points is at most `disk_radius`.
pub fn hyperbolic_threshold_edges(points: &[PolarPoint], disk_radius: f64) -> Vec<(usize, usize)> {
    let pre: Vec<[f64; 4]> = points
        .iter()
        .map(|p| [p.radius.cosh(), p.radius.sinh(), p.angle.cos(), p.angle.sin()])
        .collect();
    let threshold = disk_radius.cosh();
    let mut edges = Vec::new();
    for i in 0..pre.len() {
        let [chi, shi, ci, si] = pre[i];
        for (j, &[chj, shj, cj, sj]) in pre.iter().enumerate().skip(i + 1) {
            let cos_dtheta = ci * cj + si * sj;
            let cosh_d = chi * chj - shi * shj * cos_dtheta;
            if cosh_d <= threshold {
                edges.push((i, j));
            }
        }
    }
    edges
}

fn count_threshold_edges(pre: &[[f64; 4]], threshold: f64) -> usize {
    let mut count = 0;
    for i in 0..pre.len() {
        let [chi, shi, ci, si] = pre[i];
        for &[chj, shj, cj, sj] in &pre[i + 1..] {
            if chi * chj - shi * shj * (ci * cj + si * sj) <= threshold {
                count += 1;
            }
        }
    }
    count
}

const HGG_CALIBRATION_SAMPLES: usize = 16;
const HGG_CALIBRATION_SEED: u64 = 0x4867_6743_616c_6962;

/// Disk radius at which the mean degree of a fixed calibration ensemble of
/// `n`-point configurations matches `k_target`, found by bisection. The
/// ensemble uses common random numbers, so the result depends only on
/// `(n, k_target, gamma)` and is memoised.
pub fn calibrate_hgg_radius(n: usize, k_target: f64, gamma: f64) -> f64 {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u64, u64), f64>>> = OnceLock::new();
    let key = (n, k_target.to_bits(), gamma.to_bits());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&r) = cache.lock().unwrap().get(&key) {
        return r;
    }
    let r = calibrate_uncached(n, k_target, gamma);
    cache.lock().unwrap().insert(key, r);
    r
}

fn calibrate_uncached(n: usize, k_target: f64, gamma: f64) -> f64 {
    if n < 2 || k_target >= (n - 1) as f64 {
        return 0.0;
    }
    let alpha = (gamma - 1.0) / 2.0;
    let mut rng = rng_for(HGG_CALIBRATION_SEED ^ (n as u64).rotate_left(17));
    let draws: Vec<Vec<(f64, f64)>> = (0..HGG_CALIBRATION_SAMPLES)
        .map(|_| (0..n).map(|_| (rng.gen::<f64>(), rng.gen::<f64>() * TAU)).collect())
        .collect();
    let angles: Vec<Vec<(f64, f64)>> = draws
        .iter()
        .map(|s| s.iter().map(|&(_, th)| (th.cos(), th.sin())).collect())
        .collect();
    let mean_degree = |radius: f64| -> f64 {
        let threshold = radius.cosh();
        let total: usize = draws
            .iter()
            .zip(&angles)
            .map(|(sample, ang)| {
                let pre: Vec<[f64; 4]> = sample
                    .iter()
                    .zip(ang)
                    .map(|(&(u, _), &(c, s))| {
                        let r = radial_quantile(u, alpha, radius);
                        [r.cosh(), r.sinh(), c, s]
                    })
                    .collect();
                count_threshold_edges(&pre, threshold)
            })
            .sum();
        2.0 * total as f64 / (n * HGG_CALIBRATION_SAMPLES) as f64
    };

    // mean degree falls as the disk grows
    let (mut lo, mut hi) = (0.0f64, 2.0 * (n as f64).ln().max(1.0));
    while mean_degree(hi) > k_target {
        lo = hi;
        hi *= 2.0;
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if mean_degree(mid) > k_target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-9 {
            break;
        }
    }
    let (dl, dh) = (mean_degree(lo), mean_degree(hi));
    if (dl - k_target).abs() <= (dh - k_target).abs() {
        lo
    } else {
        hi
    }
}

/// Hyperbolic random geometric graph at temperature zero.
pub fn generate_hgg(n: usize, k_target: f64, gamma: f64, temperature: f64, seed: u64) -> Result<Graph> {
    if temperature != 0.0 {
        return Err(Error::Unsupported {
            field: "temperature",
            reason: format!("only T = 0 is implemented, got {temperature}"),
        });
    }
    let radius = calibrate_hgg_radius(n, k_target, gamma);
    let points = sample_hyperbolic_points(n, gamma, radius, seed);
    Graph::from_simple_edges(n, hyperbolic_threshold_edges(&points, radius))
}

pub fn sample_hyperbolic_points(n: usize, gamma: f64, disk_radius: f64, seed: u64) -> Vec<PolarPoint> {
    let alpha = (gamma - 1.0) / 2.0;
    let mut rng = rng_for(seed);
    (0..n)
        .map(|_| {
            let u: f64 = rng.gen();
            let angle = rng.gen::<f64>() * TAU;
            PolarPoint {
                radius: radial_quantile(u, alpha, disk_radius),
                angle,
            }
        })
        .collect()
}
