//! Reusable algebraic-law suites.
//!
//! Every suite is a pure function of (bundle, rig, options): it generates
//! `cases` inputs from the seeded generator, evaluates both sides of each
//! law, and compares them with the rig's extensional equality. Identical
//! inputs produce byte-identical [`LawReport`]s.
//!
//! Elements are small integers and functions are affine maps with small
//! coefficients, which keeps extensional equality decidable and
//! counterexamples readable. Containers are generated and compared through a
//! per-instance [`rigs::Extensional`] value, since function-shaped containers
//! (reader, state, parsers) can only be observed at a fan of sample points.

pub mod rigs;

use alloc::format;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::alt::{m0p_min_to_alter_min, m0p_min_to_monad_min, AlterOps, Monad0p, Monad0pMin};
use crate::elaborate::mona_min_to_app_min;
use crate::kind::{App, Bundle, ElemFn};
use crate::signatures::{ApplicativeMin, ApplicativeOps, FunctorOps, MonadMin, MonadOps};
use crate::transform::TransformedMonadMin;

use rigs::Extensional;

// ---------------------------------------------------------------------------
// Deterministic generation
// ---------------------------------------------------------------------------

/// Seeded deterministic generator (splitmix64 stream) with a size bound for
/// generated structure.
#[derive(Clone, Debug)]
pub struct Gen {
    state: u64,
    size: usize,
}

impl Gen {
    pub fn new(seed: u64, size: usize) -> Gen {
        Gen { state: seed, size }
    }

    /// Maximum container length / nesting generated.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Split off an independent generator.
    pub fn split(&mut self) -> Gen {
        Gen::new(self.next_u64() ^ 0x5851_F42D_4C95_7F2D, self.size)
    }

    /// Uniform in `lo..=hi`.
    pub fn i64_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }

    /// Uniform in `0..n` (`n > 0`).
    pub fn usize_below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn bool(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

/// Default element generator: integers in `-100..=100`.
pub fn small_int(g: &mut Gen) -> i64 {
    g.i64_in(-100, 100)
}

/// An affine map `x -> scale*x + shift` with small coefficients — the fixed
/// function family laws are tested against. Arithmetic wraps, keeping every
/// map total.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    pub scale: i64,
    pub shift: i64,
}

impl Affine {
    pub fn random(g: &mut Gen) -> Affine {
        Affine { scale: g.i64_in(-3, 3), shift: g.i64_in(-10, 10) }
    }

    pub fn eval(self, x: i64) -> i64 {
        self.scale.wrapping_mul(x).wrapping_add(self.shift)
    }

    /// The map as a storable, clonable function value.
    pub fn to_fn(self) -> impl ElemFn<i64, i64> {
        move |x| self.eval(x)
    }
}

impl core::fmt::Debug for Affine {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}x{:+}", self.scale, self.shift)
    }
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Suite configuration. Defaults: 500 cases, size bound 8, seed 42.
#[derive(Clone, Copy, Debug)]
pub struct LawOptions {
    pub cases: u32,
    pub size: usize,
    pub seed: u64,
}

impl Default for LawOptions {
    fn default() -> Self {
        LawOptions { cases: 500, size: 8, seed: 42 }
    }
}

/// Outcome of checking one law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawEntry {
    pub law: String,
    pub cases: u32,
    pub passed: bool,
    /// Present exactly when the law failed; the first failing case, rendered.
    pub counterexample: Option<String>,
}

/// Outcome of running one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub suite: String,
    pub entries: Vec<LawEntry>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    /// Line-oriented text: one `law: PASS` / `law: FAIL <counterexample>`
    /// line per entry.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            if e.passed {
                out.push_str(&format!("{}: PASS\n", e.law));
            } else {
                let cex = e.counterexample.as_deref().unwrap_or("");
                out.push_str(&format!("{}: FAIL {}\n", e.law, cex));
            }
        }
        out
    }

    /// One flat JSON object per law, one per line. `extra` pairs (such as
    /// the instance name) are merged into every object.
    pub fn render_json_lines(&self, extra: &[(&str, &str)]) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let mut obj = serde_json::Map::new();
            obj.insert("suite".to_string(), serde_json::Value::from(self.suite.as_str()));
            for (k, v) in extra {
                obj.insert((*k).to_string(), serde_json::Value::from(*v));
            }
            obj.insert("law".to_string(), serde_json::Value::from(e.law.as_str()));
            obj.insert("cases".to_string(), serde_json::Value::from(e.cases));
            obj.insert("pass".to_string(), serde_json::Value::from(e.passed));
            obj.insert(
                "counterexample".to_string(),
                match &e.counterexample {
                    Some(c) => serde_json::Value::from(c.as_str()),
                    None => serde_json::Value::Null,
                },
            );
            out.push_str(&serde_json::Value::Object(obj).to_string());
            out.push('\n');
        }
        out
    }
}

fn fnv1a(text: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Run `cases` generated cases of one law; the case closure returns a
/// counterexample string on failure. Stops at the first failure.
fn run_law(
    law: &str,
    opts: &LawOptions,
    mut case: impl FnMut(&mut Gen) -> Option<String>,
) -> LawEntry {
    let mut g = Gen::new(opts.seed ^ fnv1a(law), opts.size);
    for i in 0..opts.cases {
        if let Some(cex) = case(&mut g) {
            return LawEntry {
                law: law.to_string(),
                cases: i + 1,
                passed: false,
                counterexample: Some(cex),
            };
        }
    }
    LawEntry { law: law.to_string(), cases: opts.cases, passed: true, counterexample: None }
}

// ---------------------------------------------------------------------------
// Shared generation helpers
// ---------------------------------------------------------------------------

/// A generated monadic continuation `i64 -> F i64`: for each argument it
/// rebuilds a container whose shape is fixed by a seed and whose elements are
/// affine images of the argument.
fn gen_kleisli<F, R>(rig: &R, g: &mut Gen) -> (u64, impl ElemFn<i64, App<F, i64>>)
where
    F: crate::kind::TyCon,
    R: Extensional<F>,
{
    let shape = g.next_u64();
    let size = g.size();
    let rig = rig.clone();
    let k = move |x: i64| {
        let mut kg = Gen::new(shape, size);
        rig.gen_container(&mut kg, &mut |gg: &mut Gen| Affine::random(gg).eval(x))
    };
    (shape, k)
}

fn int_container<F, R>(rig: &R, g: &mut Gen) -> App<F, i64>
where
    F: crate::kind::TyCon,
    R: Extensional<F>,
{
    rig.gen_container(g, &mut small_int)
}

fn affine_containers_len<F, R>(
    rig: &R,
    g: &mut Gen,
    len: Option<usize>,
) -> (App<F, Affine>, App<F, impl ElemFn<i64, i64>>)
where
    F: crate::kind::TyCon,
    R: Extensional<F>,
{
    let shown = match len {
        Some(l) => rig.gen_container_len(g, l, &mut |gg: &mut Gen| Affine::random(gg)),
        None => rig.gen_container(g, &mut |gg: &mut Gen| Affine::random(gg)),
    };
    let funcs = rig.map_container(shown.clone(), Rc::new(|a: Affine| a.to_fn()));
    (shown, funcs)
}

fn affine_containers<F, R>(rig: &R, g: &mut Gen) -> (App<F, Affine>, App<F, impl ElemFn<i64, i64>>)
where
    F: crate::kind::TyCon,
    R: Extensional<F>,
{
    affine_containers_len(rig, g, None)
}

/// `\f -> f y`, with the function type left generic so it unifies with the
/// element type of the container it is applied against.
fn apply_to<T: ElemFn<i64, i64>>(y: i64) -> impl ElemFn<T, i64> {
    move |f: T| f(y)
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// Functor laws: identity and composition.
pub fn check_functor_laws<B, R>(bundle: &B, rig: &R, opts: &LawOptions) -> LawReport
where
    B: FunctorOps,
    R: Extensional<B::F>,
{
    let identity = run_law("identity", opts, |g| {
        let fa = int_container(rig, g);
        let lhs = bundle.fmap(|x: i64| x, fa.clone());
        if rig.container_eq(&lhs, &fa) {
            None
        } else {
            Some(format!("fa={}, fmap(id, fa)={}", rig.render(&fa), rig.render(&lhs)))
        }
    });

    let composition = run_law("composition", opts, |g| {
        let fa = int_container(rig, g);
        let f = Affine::random(g);
        let h = Affine::random(g);
        let lhs = bundle.fmap(move |x: i64| h.eval(f.eval(x)), fa.clone());
        let rhs = bundle.fmap(h.to_fn(), bundle.fmap(f.to_fn(), fa.clone()));
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "fa={}, f={:?}, h={:?}, fmap(h.f)={}, fmap(h).fmap(f)={}",
                rig.render(&fa),
                f,
                h,
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    });

    LawReport { suite: "functor".to_string(), entries: alloc::vec![identity, composition] }
}

fn applicative_identity<B, R>(bundle: &B, rig: &R, opts: &LawOptions) -> LawEntry
where
    B: ApplicativeOps,
    R: Extensional<B::F>,
{
    run_law("identity", opts, |g| {
        let v = int_container(rig, g);
        let lhs = bundle.apply(bundle.pure(|x: i64| x), v.clone());
        if rig.container_eq(&lhs, &v) {
            None
        } else {
            Some(format!("v={}, pure(id)<*>v={}", rig.render(&v), rig.render(&lhs)))
        }
    })
}

fn applicative_homomorphism<B, R>(bundle: &B, rig: &R, opts: &LawOptions) -> LawEntry
where
    B: ApplicativeOps,
    R: Extensional<B::F>,
{
    run_law("homomorphism", opts, |g| {
        let f = Affine::random(g);
        let x = small_int(g);
        let lhs = bundle.apply(bundle.pure(f.to_fn()), bundle.pure(x));
        let rhs = bundle.pure(f.eval(x));
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "f={:?}, x={}, pure(f)<*>pure(x)={}, pure(f x)={}",
                f,
                x,
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    })
}

fn applicative_interchange<B, R>(bundle: &B, rig: &R, opts: &LawOptions) -> LawEntry
where
    B: ApplicativeOps,
    R: Extensional<B::F>,
{
    run_law("interchange", opts, |g| {
        let (shown, u) = affine_containers(rig, g);
        let y = small_int(g);
        let lhs = bundle.apply(u.clone(), bundle.pure(y));
        let rhs = bundle.apply(bundle.pure(apply_to(y)), u);
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "u={}, y={}, u<*>pure(y)={}, pure($y)<*>u={}",
                rig.render(&shown),
                y,
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    })
}

/// The composition statement `pure (.) <*> u <*> v <*> w == u <*> (v <*> w)`.
/// The left side is phrased through `lift_a2`, which elaboration defines as
/// exactly `apply(fmap(curry .., u), v)`, i.e. the literal chain.
fn applicative_composition<B, R>(bundle: &B, rig: &R, opts: &LawOptions) -> LawEntry
where
    B: ApplicativeOps,
    R: Extensional<B::F>,
{
    run_law("composition", opts, |g| {
        let (u_shown, u) = affine_containers_len(rig, g, None);
        let (v_shown, v) = affine_containers_len(rig, g, None);
        let w = int_container(rig, g);
        let composed = bundle.lift_a2(
            |f, h| {
                let f = f.clone();
                move |x: i64| f(h(x))
            },
            u.clone(),
            v.clone(),
        );
        let lhs = bundle.apply(composed, w.clone());
        let rhs = bundle.apply(u, bundle.apply(v, w.clone()));
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "u={}, v={}, w={}, (u.v)<*>w={}, u<*>(v<*>w)={}",
                rig.render(&u_shown),
                rig.render(&v_shown),
                rig.render(&w),
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    })
}

/// Composition restricted to equal-length, elementwise-aligned containers:
/// the composed functions pair up with `u` and `v` position by position
/// instead of going through `pure`, whose singleton encoding would truncate
/// a pairwise product. This is the composition statement the zip instance
/// satisfies.
fn applicative_composition_equal_length<B, R>(bundle: &B, rig: &R, opts: &LawOptions) -> LawEntry
where
    B: ApplicativeOps,
    R: Extensional<B::F>,
{
    run_law("composition_equal_length", opts, |g| {
        let len = g.usize_below(g.size() + 1);
        let pairs =
            rig.gen_container_len(g, len, &mut |gg: &mut Gen| {
                (Affine::random(gg), Affine::random(gg))
            });
        let u = rig.map_container(pairs.clone(), Rc::new(|(f, _): (Affine, Affine)| f.to_fn()));
        let v = rig.map_container(pairs.clone(), Rc::new(|(_, h): (Affine, Affine)| h.to_fn()));
        let composed = rig.map_container(
            pairs.clone(),
            Rc::new(|(f, h): (Affine, Affine)| move |x: i64| f.eval(h.eval(x))),
        );
        let w = rig.gen_container_len(g, len, &mut small_int);
        let lhs = bundle.apply(composed, w.clone());
        let rhs = bundle.apply(u, bundle.apply(v, w.clone()));
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "(u,v)={}, w={}, (u.v)<*>w={}, u<*>(v<*>w)={}",
                rig.render(&pairs),
                rig.render(&w),
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    })
}

/// Applicative laws: identity, homomorphism, interchange, composition.
pub fn check_applicative_laws<B, R>(bundle: &B, rig: &R, opts: &LawOptions) -> LawReport
where
    B: ApplicativeOps,
    R: Extensional<B::F>,
{
    LawReport {
        suite: "applicative".to_string(),
        entries: alloc::vec![
            applicative_identity(bundle, rig, opts),
            applicative_homomorphism(bundle, rig, opts),
            applicative_interchange(bundle, rig, opts),
            applicative_composition(bundle, rig, opts),
        ],
    }
}

/// The law set for the pairwise (zip) list applicative, whose singleton
/// `pure` breaks the full identity law: homomorphism, interchange, and
/// composition restricted to equal-length containers.
pub fn check_applicative_laws_restricted<B, R>(
    bundle: &B,
    rig: &R,
    opts: &LawOptions,
) -> LawReport
where
    B: ApplicativeOps,
    R: Extensional<B::F>,
{
    LawReport {
        suite: "applicative-restricted".to_string(),
        entries: alloc::vec![
            applicative_homomorphism(bundle, rig, opts),
            applicative_interchange(bundle, rig, opts),
            applicative_composition_equal_length(bundle, rig, opts),
        ],
    }
}

/// Monad laws (left identity, right identity, associativity) plus the
/// coherence of the members reachable along two derivation routes:
/// `lift_m == fmap`, `ap == apply`, `ret == pure`.
pub fn check_monad_laws<B, R>(bundle: &B, rig: &R, opts: &LawOptions) -> LawReport
where
    B: MonadOps,
    R: Extensional<B::F>,
{
    let left_identity = run_law("left_identity", opts, |g| {
        let a = small_int(g);
        let (shape, k) = gen_kleisli(rig, g);
        let lhs = bundle.bind(bundle.ret(a), k.clone());
        let rhs = k(a);
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "a={}, k=<shape {:#x}>, bind(ret a, k)={}, k(a)={}",
                a,
                shape,
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    });

    let right_identity = run_law("right_identity", opts, |g| {
        let m = int_container(rig, g);
        let b = bundle.clone();
        let lhs = bundle.bind(m.clone(), move |x: i64| b.ret(x));
        if rig.container_eq(&lhs, &m) {
            None
        } else {
            Some(format!("m={}, bind(m, ret)={}", rig.render(&m), rig.render(&lhs)))
        }
    });

    let associativity = run_law("associativity", opts, |g| {
        let m = int_container(rig, g);
        let (shape_k, k) = gen_kleisli(rig, g);
        let (shape_h, h) = gen_kleisli(rig, g);
        let lhs = bundle.bind(bundle.bind(m.clone(), k.clone()), h.clone());
        let b = bundle.clone();
        let rhs = bundle.bind(m.clone(), move |a: i64| b.bind(k(a), h.clone()));
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "m={}, k=<shape {:#x}>, h=<shape {:#x}>, (m>>=k)>>=h={}, m>>=(k>=>h)={}",
                rig.render(&m),
                shape_k,
                shape_h,
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    });

    let coherence_lift_m = run_law("coherence_lift_m_fmap", opts, |g| {
        let m = int_container(rig, g);
        let f = Affine::random(g);
        let lhs = bundle.lift_m(f.to_fn(), m.clone());
        let rhs = bundle.fmap(f.to_fn(), m.clone());
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "m={}, f={:?}, lift_m={}, fmap={}",
                rig.render(&m),
                f,
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    });

    let coherence_ap = run_law("coherence_ap_apply", opts, |g| {
        let (shown, mf) = affine_containers(rig, g);
        let ma = int_container(rig, g);
        let lhs = bundle.ap(mf.clone(), ma.clone());
        let rhs = bundle.apply(mf, ma.clone());
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "mf={}, ma={}, ap={}, apply={}",
                rig.render(&shown),
                rig.render(&ma),
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    });

    let coherence_ret = run_law("coherence_ret_pure", opts, |g| {
        let a = small_int(g);
        let lhs = bundle.ret(a);
        let rhs = bundle.pure(a);
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!("a={}, ret={}, pure={}", a, rig.render(&lhs), rig.render(&rhs)))
        }
    });

    LawReport {
        suite: "monad".to_string(),
        entries: alloc::vec![
            left_identity,
            right_identity,
            associativity,
            coherence_lift_m,
            coherence_ap,
            coherence_ret,
        ],
    }
}

/// Alternative laws: `(alt, empty)` is a monoid.
pub fn check_alter_laws<B, R>(bundle: &B, rig: &R, opts: &LawOptions) -> LawReport
where
    B: AlterOps,
    R: Extensional<B::F>,
{
    let assoc = run_law("alt_associativity", opts, |g| {
        let x = int_container(rig, g);
        let y = int_container(rig, g);
        let z = int_container(rig, g);
        let lhs = bundle.alt(x.clone(), bundle.alt(y.clone(), z.clone()));
        let rhs = bundle.alt(bundle.alt(x.clone(), y.clone()), z.clone());
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "x={}, y={}, z={}, x<|>(y<|>z)={}, (x<|>y)<|>z={}",
                rig.render(&x),
                rig.render(&y),
                rig.render(&z),
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    });

    let left_id = run_law("alt_left_identity", opts, |g| {
        let x = int_container(rig, g);
        let lhs = bundle.alt(bundle.empty(), x.clone());
        if rig.container_eq(&lhs, &x) {
            None
        } else {
            Some(format!("x={}, empty<|>x={}", rig.render(&x), rig.render(&lhs)))
        }
    });

    let right_id = run_law("alt_right_identity", opts, |g| {
        let x = int_container(rig, g);
        let lhs = bundle.alt(x.clone(), bundle.empty());
        if rig.container_eq(&lhs, &x) {
            None
        } else {
            Some(format!("x={}, x<|>empty={}", rig.render(&x), rig.render(&lhs)))
        }
    });

    LawReport { suite: "alter".to_string(), entries: alloc::vec![assoc, left_id, right_id] }
}

/// Monad-zero-plus laws: left zero absorbs bind, `(plus, zero)` is a monoid,
/// and the two applicative derivation routes out of the minimal bundle agree
/// (the inheritance diamond is coherent).
pub fn check_monad0p_laws<M, R>(bundle: &Monad0p<M>, rig: &R, opts: &LawOptions) -> LawReport
where
    M: Monad0pMin,
    R: Extensional<M::F>,
{
    use crate::alt::Monad0pOps;

    let left_zero = run_law("left_zero", opts, |g| {
        let (shape, k) = gen_kleisli(rig, g);
        let lhs = bundle.bind(bundle.zero::<i64>(), k);
        let rhs = bundle.zero::<i64>();
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "k=<shape {:#x}>, bind(zero, k)={}, zero={}",
                shape,
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    });

    let assoc = run_law("plus_associativity", opts, |g| {
        let x = int_container(rig, g);
        let y = int_container(rig, g);
        let z = int_container(rig, g);
        let lhs = bundle.plus(x.clone(), bundle.plus(y.clone(), z.clone()));
        let rhs = bundle.plus(bundle.plus(x.clone(), y.clone()), z.clone());
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "x={}, y={}, z={}",
                rig.render(&x),
                rig.render(&y),
                rig.render(&z)
            ))
        }
    });

    let left_id = run_law("plus_left_identity", opts, |g| {
        let x = int_container(rig, g);
        let lhs = bundle.plus(bundle.zero(), x.clone());
        if rig.container_eq(&lhs, &x) {
            None
        } else {
            Some(format!("x={}, plus(zero, x)={}", rig.render(&x), rig.render(&lhs)))
        }
    });

    let right_id = run_law("plus_right_identity", opts, |g| {
        let x = int_container(rig, g);
        let lhs = bundle.plus(x.clone(), bundle.zero());
        if rig.container_eq(&lhs, &x) {
            None
        } else {
            Some(format!("x={}, plus(x, zero)={}", rig.render(&x), rig.render(&lhs)))
        }
    });

    let via_alter = m0p_min_to_alter_min(bundle.min().clone());
    let via_monad = mona_min_to_app_min(m0p_min_to_monad_min(bundle.min().clone()));

    let diamond_pure = run_law("diamond_pure", opts, |g| {
        let a = small_int(g);
        let lhs = via_alter.pure(a);
        let rhs = via_monad.pure(a);
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "a={}, via alter={}, via monad={}",
                a,
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    });

    let diamond_apply = run_law("diamond_apply", opts, |g| {
        let (shown, fs) = affine_containers(rig, g);
        let xs = int_container(rig, g);
        let lhs = via_alter.apply(fs.clone(), xs.clone());
        let rhs = via_monad.apply(fs, xs.clone());
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "fs={}, xs={}, via alter={}, via monad={}",
                rig.render(&shown),
                rig.render(&xs),
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    });

    LawReport {
        suite: "monad0p".to_string(),
        entries: alloc::vec![
            left_zero,
            assoc,
            left_id,
            right_id,
            diamond_pure,
            diamond_apply,
        ],
    }
}

/// Transformer laws: `lift` maps `ret` to `ret` and distributes over `bind`.
pub fn check_transformer_laws<T, RB, RT>(
    transformed: &T,
    base_rig: &RB,
    rig: &RT,
    opts: &LawOptions,
) -> LawReport
where
    T: TransformedMonadMin,
    RB: Extensional<<T::Base as Bundle>::F>,
    RT: Extensional<T::F>,
{
    let lift_unit = run_law("lift_unit", opts, |g| {
        let a = small_int(g);
        let lhs = transformed.lift(transformed.base().ret(a));
        let rhs = transformed.ret(a);
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "a={}, lift(ret a)={}, ret(a)={}",
                a,
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    });

    let lift_bind = run_law("lift_bind", opts, |g| {
        let m = base_rig.gen_container(g, &mut small_int);
        let (shape, k) = gen_kleisli(base_rig, g);
        let lhs = transformed.lift(transformed.base().bind(m.clone(), k.clone()));
        let t = transformed.clone();
        let rhs = transformed.bind(transformed.lift(m.clone()), move |a: i64| t.lift(k(a)));
        if rig.container_eq(&lhs, &rhs) {
            None
        } else {
            Some(format!(
                "m={}, k=<shape {:#x}>, lift(m>>=k)={}, lift(m)>>=lift.k={}",
                base_rig.render(&m),
                shape,
                rig.render(&lhs),
                rig.render(&rhs)
            ))
        }
    });

    LawReport { suite: "transformer".to_string(), entries: alloc::vec![lift_unit, lift_bind] }
}

#[cfg(test)]
mod tests {
    use super::rigs::{
        EitherRig, IdentityRig, ListRig, OptionRig, StateTOptionRig, StateRig,
    };
    use super::*;
    use crate::elaborate::{mk_functor, mk_monad};
    use crate::instances::{
        list_monad_min, option_monad_min, state_monad_min, ListTag, OptionMonadMin,
    };
    use crate::kind::Elem;
    use crate::signatures::FunctorMin;
    use crate::transform::{state_t, StateT, StateTTag};
    use alloc::vec::Vec;

    /// Deliberately broken: keeps only the first element, so identity fails
    /// while composition still holds.
    #[derive(Clone, Copy)]
    struct TruncatingListFunctorMin;

    impl crate::kind::Bundle for TruncatingListFunctorMin {
        type F = ListTag;
    }

    impl FunctorMin for TruncatingListFunctorMin {
        fn fmap<A: Elem, B: Elem>(&self, f: impl ElemFn<A, B>, fa: Vec<A>) -> Vec<B> {
            fa.into_iter().take(1).map(f).collect()
        }
    }

    /// Deliberately broken: bind discards the continuation on singletons.
    #[derive(Clone, Copy)]
    struct SingletonSwallowingListMin;

    impl crate::kind::Bundle for SingletonSwallowingListMin {
        type F = ListTag;
    }

    impl crate::signatures::MonadMin for SingletonSwallowingListMin {
        fn ret<A: Elem>(&self, a: A) -> Vec<A> {
            alloc::vec![a]
        }

        fn bind<A: Elem, B: Elem>(&self, m: Vec<A>, k: impl ElemFn<A, Vec<B>>) -> Vec<B> {
            if m.len() == 1 {
                Vec::new()
            } else {
                m.into_iter().flat_map(k).collect()
            }
        }
    }

    /// Deliberately broken transformer: lift advances the state it should
    /// leave untouched.
    #[derive(Clone)]
    struct StateCorruptingLift {
        inner: StateT<i64, OptionMonadMin>,
    }

    impl crate::kind::Bundle for StateCorruptingLift {
        type F = StateTTag<i64, crate::instances::OptionTag>;
    }

    impl crate::signatures::MonadMin for StateCorruptingLift {
        fn ret<A: Elem>(&self, a: A) -> crate::kind::App<Self::F, A> {
            self.inner.ret(a)
        }

        fn bind<A: Elem, B: Elem>(
            &self,
            m: crate::kind::App<Self::F, A>,
            k: impl ElemFn<A, crate::kind::App<Self::F, B>>,
        ) -> crate::kind::App<Self::F, B> {
            self.inner.bind(m, k)
        }
    }

    impl crate::transform::TransformedMonadMin for StateCorruptingLift {
        type Base = OptionMonadMin;

        fn base(&self) -> &OptionMonadMin {
            self.inner.base()
        }

        fn lift<A: Elem>(&self, m: Option<A>) -> crate::kind::App<Self::F, A> {
            Rc::new(move |s: i64| m.clone().map(|a| (a, s + 1)))
        }
    }

    #[test]
    fn list_functor_laws_pass() {
        let report = check_functor_laws(
            &mk_monad(list_monad_min()),
            &ListRig,
            &LawOptions::default(),
        );
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.entries.len(), 2);
        assert!(report.entries.iter().all(|e| e.cases == 500));
    }

    #[test]
    fn truncating_functor_fails_identity_with_counterexample() {
        let report = check_functor_laws(
            &mk_functor(TruncatingListFunctorMin),
            &ListRig,
            &LawOptions::default(),
        );
        let identity = &report.entries[0];
        assert_eq!(identity.law, "identity");
        assert!(!identity.passed);
        assert!(identity.counterexample.is_some());
        let composition = &report.entries[1];
        assert!(composition.passed);
        assert!(!report.passed());
    }

    #[test]
    fn zero_cases_is_a_vacuous_pass() {
        let opts = LawOptions { cases: 0, ..LawOptions::default() };
        let report = check_monad_laws(&mk_monad(option_monad_min()), &OptionRig, &opts);
        assert!(report.passed());
        assert!(report.entries.iter().all(|e| e.cases == 0));
    }

    #[test]
    fn broken_monad_fails_left_identity() {
        let report = check_monad_laws(
            &mk_monad(SingletonSwallowingListMin),
            &ListRig,
            &LawOptions::default(),
        );
        let left = report.entries.iter().find(|e| e.law == "left_identity").unwrap();
        assert!(!left.passed);
        assert!(left.counterexample.is_some());
    }

    #[test]
    fn identity_monad_laws_pass() {
        let report = check_monad_laws(
            &mk_monad(crate::instances::identity_monad_min()),
            &IdentityRig,
            &LawOptions::default(),
        );
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn reports_are_deterministic() {
        let opts = LawOptions::default();
        let a = check_monad_laws(&mk_monad(list_monad_min()), &ListRig, &opts);
        let b = check_monad_laws(&mk_monad(list_monad_min()), &ListRig, &opts);
        assert_eq!(a.render_text(), b.render_text());
        assert_eq!(
            a.render_json_lines(&[("instance", "list")]),
            b.render_json_lines(&[("instance", "list")])
        );
    }

    #[test]
    fn different_seeds_generate_different_cases() {
        // Not a law; a sanity check that the seed actually matters.
        let mut g1 = Gen::new(1, 8);
        let mut g2 = Gen::new(2, 8);
        let a: Vec<i64> = (0..16).map(|_| small_int(&mut g1)).collect();
        let b: Vec<i64> = (0..16).map(|_| small_int(&mut g2)).collect();
        assert_ne!(a, b);
    }

    #[test]
    fn zip_restricted_suite_passes_and_identity_fails() {
        use crate::elaborate::mk_applicative;
        use crate::instances::list_zip_applicative_min;
        let bundle = mk_applicative(list_zip_applicative_min());
        let restricted =
            check_applicative_laws_restricted(&bundle, &ListRig, &LawOptions::default());
        assert!(restricted.passed(), "{}", restricted.render_text());

        // The full identity law fails on a two-element witness.
        use crate::signatures::ApplicativeOps;
        let v = alloc::vec![1i64, 2];
        let applied = bundle.apply(bundle.pure(|x: i64| x), v.clone());
        assert_ne!(applied, v);

        let full = check_applicative_laws(&bundle, &ListRig, &LawOptions::default());
        let identity = full.entries.iter().find(|e| e.law == "identity").unwrap();
        assert!(!identity.passed);
    }

    #[test]
    fn broken_lift_fails_lift_bind() {
        let broken = StateCorruptingLift { inner: state_t::<i64, _>(option_monad_min()) };
        let report = check_transformer_laws(
            &broken,
            &OptionRig,
            &StateTOptionRig::default(),
            &LawOptions::default(),
        );
        let lift_bind = report.entries.iter().find(|e| e.law == "lift_bind").unwrap();
        assert!(!lift_bind.passed);
        assert!(!report.passed());
    }

    #[test]
    fn healthy_transformer_passes() {
        let t = state_t::<i64, _>(option_monad_min());
        let report = check_transformer_laws(
            &t,
            &OptionRig,
            &StateTOptionRig::default(),
            &LawOptions::default(),
        );
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn state_monad_laws_pass_extensionally() {
        let report = check_monad_laws(
            &mk_monad(state_monad_min::<i64>()),
            &StateRig::default(),
            &LawOptions::default(),
        );
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn either_applicative_laws_pass() {
        let report = check_applicative_laws(
            &mk_monad(crate::instances::either_monad_min::<alloc::string::String>()),
            &EitherRig,
            &LawOptions::default(),
        );
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn json_lines_are_flat_objects() {
        let report = check_functor_laws(
            &mk_monad(list_monad_min()),
            &ListRig,
            &LawOptions { cases: 10, ..LawOptions::default() },
        );
        let json = report.render_json_lines(&[("instance", "list")]);
        for line in json.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            let obj = v.as_object().unwrap();
            assert!(obj.contains_key("suite"));
            assert!(obj.contains_key("instance"));
            assert!(obj.contains_key("law"));
            assert!(obj.contains_key("cases"));
            assert!(obj.contains_key("pass"));
            assert!(obj.contains_key("counterexample"));
            // Flat: no nested objects or arrays.
            assert!(obj.values().all(|v| !v.is_object() && !v.is_array()));
        }
    }
}
