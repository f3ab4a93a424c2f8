//! Class signatures: the contracts minimal and full bundles satisfy.
//!
//! Minimal signatures (`*Min`) list the operations a user writes by hand;
//! full signatures (`*Ops`) list everything an elaborated bundle exposes.
//! Subclassing follows the class hierarchy, so every member of a full monad
//! bundle is reachable without qualifiers: `monad.fmap(..)`, not
//! `monad.applicative().functor().fmap(..)` (the embedded bundles still
//! exist, see [`crate::elaborate`]).

use alloc::vec::Vec;

use crate::kind::{App, Bundle, Elem, ElemFn, ElemFn2, ElemFn3, TyCon};

/// Minimal functor definition: `fmap` alone.
pub trait FunctorMin: Bundle {
    fn fmap<A: Elem, B: Elem>(&self, f: impl ElemFn<A, B>, fa: App<Self::F, A>)
        -> App<Self::F, B>;
}

/// Minimal applicative definition: `pure` and `apply`.
pub trait ApplicativeMin: Bundle {
    fn pure<A: Elem>(&self, a: A) -> App<Self::F, A>;

    fn apply<A: Elem, B: Elem, G: ElemFn<A, B>>(
        &self,
        ff: App<Self::F, G>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B>;
}

/// Minimal monad definition: `ret` and `bind`.
pub trait MonadMin: Bundle {
    fn ret<A: Elem>(&self, a: A) -> App<Self::F, A>;

    fn bind<A: Elem, B: Elem>(
        &self,
        m: App<Self::F, A>,
        k: impl ElemFn<A, App<Self::F, B>>,
    ) -> App<Self::F, B>;
}

/// Alternate minimal monad definition: `ret`, `fmap` and `join`.
///
/// Equivalent to [`MonadMin`]; conversions in both directions live in
/// [`crate::elaborate`] so users can pick whichever is easier to write.
pub trait JoinMin: Bundle {
    fn ret<A: Elem>(&self, a: A) -> App<Self::F, A>;

    fn fmap<A: Elem, B: Elem>(&self, f: impl ElemFn<A, B>, fa: App<Self::F, A>)
        -> App<Self::F, B>;

    fn join<A: Elem>(&self, nested: App<Self::F, App<Self::F, A>>) -> App<Self::F, A>;
}

/// Minimal foldable definition: a right fold over the container.
pub trait FoldableMin: Bundle {
    fn fold_right<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn2<A, B, B>,
        init: B,
        ta: App<Self::F, A>,
    ) -> B;
}

/// A monoid over a ground type, passed around as an explicit value
/// (the writer instance takes one).
pub trait MonoidMin: Clone + 'static {
    type Value: Elem;

    fn empty(&self) -> Self::Value;

    fn combine(&self, x: Self::Value, y: Self::Value) -> Self::Value;
}

/// Full functor signature.
pub trait FunctorOps: Bundle {
    fn fmap<A: Elem, B: Elem>(&self, f: impl ElemFn<A, B>, fa: App<Self::F, A>)
        -> App<Self::F, B>;

    /// `b <$ fa`: keep the shape of `fa`, replace every element with `b`.
    fn replace_left<A: Elem, B: Elem>(&self, b: B, fa: App<Self::F, A>) -> App<Self::F, B>;

    /// `fa $> b`, the mirror image of [`FunctorOps::replace_left`].
    fn replace_right<A: Elem, B: Elem>(&self, fa: App<Self::F, A>, b: B) -> App<Self::F, B>;

    fn void<A: Elem>(&self, fa: App<Self::F, A>) -> App<Self::F, ()>;
}

/// Full applicative signature.
pub trait ApplicativeOps: FunctorOps {
    fn pure<A: Elem>(&self, a: A) -> App<Self::F, A>;

    fn apply<A: Elem, B: Elem, G: ElemFn<A, B>>(
        &self,
        ff: App<Self::F, G>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B>;

    fn lift_a2<A: Elem, B: Elem, C: Elem>(
        &self,
        f: impl ElemFn2<A, B, C>,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
    ) -> App<Self::F, C>;

    fn lift_a3<A: Elem, B: Elem, C: Elem, D: Elem>(
        &self,
        f: impl ElemFn3<A, B, C, D>,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
        fc: App<Self::F, C>,
    ) -> App<Self::F, D>;

    /// `fa *> fb`: sequence both, keep the right result.
    fn seq_right<A: Elem, B: Elem>(
        &self,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
    ) -> App<Self::F, B>;

    /// `fa <* fb`: sequence both, keep the left result.
    fn seq_left<A: Elem, B: Elem>(
        &self,
        fa: App<Self::F, A>,
        fb: App<Self::F, B>,
    ) -> App<Self::F, A>;
}

/// Full monad signature.
///
/// Everything beyond `ret` and `bind` is derived by elaboration; see
/// [`MONAD_MEMBERS`] for the roster.
pub trait MonadOps: ApplicativeOps {
    fn ret<A: Elem>(&self, a: A) -> App<Self::F, A>;

    fn bind<A: Elem, B: Elem>(
        &self,
        m: App<Self::F, A>,
        k: impl ElemFn<A, App<Self::F, B>>,
    ) -> App<Self::F, B>;

    /// `m >> k`: run `m`, discard its result, then run `k`.
    ///
    /// `k` is an already-constructed computation; callers that need to delay
    /// its construction go through [`MonadOps::bind`] with a closure.
    fn then<A: Elem, B: Elem>(&self, m: App<Self::F, A>, k: App<Self::F, B>)
        -> App<Self::F, B>;

    fn join<A: Elem>(&self, nested: App<Self::F, App<Self::F, A>>) -> App<Self::F, A>;

    /// `f >=> g`: Kleisli composition.
    fn kleisli<A: Elem, B: Elem, C: Elem>(
        &self,
        f: impl ElemFn<A, App<Self::F, B>>,
        g: impl ElemFn<B, App<Self::F, C>>,
    ) -> impl ElemFn<A, App<Self::F, C>>;

    /// `g <=< f`: Kleisli composition, arguments flipped.
    fn kleisli_rev<A: Elem, B: Elem, C: Elem>(
        &self,
        g: impl ElemFn<B, App<Self::F, C>>,
        f: impl ElemFn<A, App<Self::F, B>>,
    ) -> impl ElemFn<A, App<Self::F, C>>;

    /// Extensionally equal to `fmap`, but derived straight from `bind`.
    fn lift_m<A: Elem, B: Elem>(&self, f: impl ElemFn<A, B>, m: App<Self::F, A>)
        -> App<Self::F, B>;

    fn lift_m2<A: Elem, B: Elem, C: Elem>(
        &self,
        f: impl ElemFn2<A, B, C>,
        ma: App<Self::F, A>,
        mb: App<Self::F, B>,
    ) -> App<Self::F, C>;

    /// Extensionally equal to `apply`, but derived straight from `bind`.
    fn ap<A: Elem, B: Elem, G: ElemFn<A, B>>(
        &self,
        mf: App<Self::F, G>,
        ma: App<Self::F, A>,
    ) -> App<Self::F, B>;

    /// Repeat `m` without end. Terminates only in monads whose `bind` can
    /// stop calling the continuation (option, either, parsers, ...);
    /// diverges in total monads, as in Haskell.
    fn forever<A: Elem, B: Elem>(&self, m: App<Self::F, A>) -> App<Self::F, B>;

    fn map_m<A: Elem, B: Elem>(
        &self,
        f: impl ElemFn<A, App<Self::F, B>>,
        items: Vec<A>,
    ) -> App<Self::F, Vec<B>>;

    fn sequence<A: Elem>(&self, items: Vec<App<Self::F, A>>) -> App<Self::F, Vec<A>>;

    fn filter_m<A: Elem>(
        &self,
        pred: impl ElemFn<A, App<Self::F, bool>>,
        items: Vec<A>,
    ) -> App<Self::F, Vec<A>>;

    /// Run `m` `count` times, collecting the results. `count = 0` yields
    /// `ret(vec![])`; a negative count is unrepresentable by the type.
    fn replicate_m<A: Elem>(&self, count: usize, m: App<Self::F, A>) -> App<Self::F, Vec<A>>;

    fn when(&self, cond: bool, m: App<Self::F, ()>) -> App<Self::F, ()>;

    fn unless(&self, cond: bool, m: App<Self::F, ()>) -> App<Self::F, ()>;
}

/// Every member of a full monad bundle.
pub const MONAD_MEMBERS: [&str; 26] = [
    "fmap",
    "replace_left",
    "replace_right",
    "void",
    "pure",
    "apply",
    "lift_a2",
    "lift_a3",
    "seq_right",
    "seq_left",
    "ret",
    "bind",
    "then",
    "join",
    "kleisli",
    "kleisli_rev",
    "lift_m",
    "lift_m2",
    "ap",
    "forever",
    "map_m",
    "sequence",
    "filter_m",
    "replicate_m",
    "when",
    "unless",
];

/// The two members a user writes by hand.
pub const MONAD_MIN_MEMBERS: [&str; 2] = ["ret", "bind"];

// Elaboration must buy at least twenty members beyond the minimal pair.
const _: () = assert!(MONAD_MEMBERS.len() - MONAD_MIN_MEMBERS.len() >= 20);

// ---------------------------------------------------------------------------
// Member overriding
// ---------------------------------------------------------------------------
//
// A derived member can be replaced by a hand-written one without rebuilding
// the rest of the bundle, e.g. swapping the generic `apply` for a faster
// specialised product. Replacements are polymorphic operations in their own
// right, so each overridable member has an `*Op` trait below; `with_overrides`
// wraps a full bundle with any subset of them.

/// Replacement for [`FunctorOps::fmap`] at constructor `F`.
pub trait FmapOp<F: TyCon>: Clone + 'static {
    fn fmap<A: Elem, B: Elem>(&self, f: impl ElemFn<A, B>, fa: App<F, A>) -> App<F, B>;
}

/// Replacement for [`ApplicativeOps::pure`] at constructor `F`.
pub trait PureOp<F: TyCon>: Clone + 'static {
    fn pure<A: Elem>(&self, a: A) -> App<F, A>;
}

/// Replacement for [`ApplicativeOps::apply`] at constructor `F`.
pub trait ApplyOp<F: TyCon>: Clone + 'static {
    fn apply<A: Elem, B: Elem, G: ElemFn<A, B>>(&self, ff: App<F, G>, fa: App<F, A>)
        -> App<F, B>;
}

/// Replacement for [`MonadOps::ret`] at constructor `F`.
pub trait RetOp<F: TyCon>: Clone + 'static {
    fn ret<A: Elem>(&self, a: A) -> App<F, A>;
}

/// Replacement for [`MonadOps::bind`] at constructor `F`.
pub trait BindOp<F: TyCon>: Clone + 'static {
    fn bind<A: Elem, B: Elem>(
        &self,
        m: App<F, A>,
        k: impl ElemFn<A, App<F, B>>,
    ) -> App<F, B>;
}

/// Slot marker: keep the original member.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Keep;

/// Slot marker: use the supplied replacement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Use<Op>(pub Op);

/// A partial set of monad member replacements. Slots default to [`Keep`];
/// the builder methods fill them in one at a time.
#[derive(Clone, Debug)]
pub struct MonadOverrides<Fm = Keep, Pu = Keep, Ap = Keep, Re = Keep, Bi = Keep> {
    fmap: Fm,
    pure: Pu,
    apply: Ap,
    ret: Re,
    bind: Bi,
}

impl MonadOverrides {
    /// The empty override set.
    pub fn none() -> Self {
        MonadOverrides { fmap: Keep, pure: Keep, apply: Keep, ret: Keep, bind: Keep }
    }
}

impl Default for MonadOverrides {
    fn default() -> Self {
        Self::none()
    }
}

impl<Fm, Pu, Ap, Re, Bi> MonadOverrides<Fm, Pu, Ap, Re, Bi> {
    pub fn fmap<Op>(self, op: Op) -> MonadOverrides<Use<Op>, Pu, Ap, Re, Bi> {
        MonadOverrides {
            fmap: Use(op),
            pure: self.pure,
            apply: self.apply,
            ret: self.ret,
            bind: self.bind,
        }
    }

    pub fn pure<Op>(self, op: Op) -> MonadOverrides<Fm, Use<Op>, Ap, Re, Bi> {
        MonadOverrides {
            fmap: self.fmap,
            pure: Use(op),
            apply: self.apply,
            ret: self.ret,
            bind: self.bind,
        }
    }

    pub fn apply<Op>(self, op: Op) -> MonadOverrides<Fm, Pu, Use<Op>, Re, Bi> {
        MonadOverrides {
            fmap: self.fmap,
            pure: self.pure,
            apply: Use(op),
            ret: self.ret,
            bind: self.bind,
        }
    }

    pub fn ret<Op>(self, op: Op) -> MonadOverrides<Fm, Pu, Ap, Use<Op>, Bi> {
        MonadOverrides {
            fmap: self.fmap,
            pure: self.pure,
            apply: self.apply,
            ret: Use(op),
            bind: self.bind,
        }
    }

    pub fn bind<Op>(self, op: Op) -> MonadOverrides<Fm, Pu, Ap, Re, Use<Op>> {
        MonadOverrides {
            fmap: self.fmap,
            pure: self.pure,
            apply: self.apply,
            ret: self.ret,
            bind: Use(op),
        }
    }
}

/// Slot dispatch: either run the replacement or fall through to the base
/// bundle's member.
pub trait FmapSlot<B: FunctorOps>: Clone + 'static {
    fn run<A: Elem, C: Elem>(
        &self,
        base: &B,
        f: impl ElemFn<A, C>,
        fa: App<B::F, A>,
    ) -> App<B::F, C>;
}

impl<B: FunctorOps> FmapSlot<B> for Keep {
    fn run<A: Elem, C: Elem>(
        &self,
        base: &B,
        f: impl ElemFn<A, C>,
        fa: App<B::F, A>,
    ) -> App<B::F, C> {
        base.fmap(f, fa)
    }
}

impl<B: FunctorOps, Op: FmapOp<B::F>> FmapSlot<B> for Use<Op> {
    fn run<A: Elem, C: Elem>(
        &self,
        _base: &B,
        f: impl ElemFn<A, C>,
        fa: App<B::F, A>,
    ) -> App<B::F, C> {
        self.0.fmap(f, fa)
    }
}

pub trait PureSlot<B: ApplicativeOps>: Clone + 'static {
    fn run<A: Elem>(&self, base: &B, a: A) -> App<B::F, A>;
}

impl<B: ApplicativeOps> PureSlot<B> for Keep {
    fn run<A: Elem>(&self, base: &B, a: A) -> App<B::F, A> {
        base.pure(a)
    }
}

impl<B: ApplicativeOps, Op: PureOp<B::F>> PureSlot<B> for Use<Op> {
    fn run<A: Elem>(&self, _base: &B, a: A) -> App<B::F, A> {
        self.0.pure(a)
    }
}

pub trait ApplySlot<B: ApplicativeOps>: Clone + 'static {
    fn run<A: Elem, C: Elem, G: ElemFn<A, C>>(
        &self,
        base: &B,
        ff: App<B::F, G>,
        fa: App<B::F, A>,
    ) -> App<B::F, C>;
}

impl<B: ApplicativeOps> ApplySlot<B> for Keep {
    fn run<A: Elem, C: Elem, G: ElemFn<A, C>>(
        &self,
        base: &B,
        ff: App<B::F, G>,
        fa: App<B::F, A>,
    ) -> App<B::F, C> {
        base.apply(ff, fa)
    }
}

impl<B: ApplicativeOps, Op: ApplyOp<B::F>> ApplySlot<B> for Use<Op> {
    fn run<A: Elem, C: Elem, G: ElemFn<A, C>>(
        &self,
        _base: &B,
        ff: App<B::F, G>,
        fa: App<B::F, A>,
    ) -> App<B::F, C> {
        self.0.apply(ff, fa)
    }
}

pub trait RetSlot<B: MonadOps>: Clone + 'static {
    fn run<A: Elem>(&self, base: &B, a: A) -> App<B::F, A>;
}

impl<B: MonadOps> RetSlot<B> for Keep {
    fn run<A: Elem>(&self, base: &B, a: A) -> App<B::F, A> {
        base.ret(a)
    }
}

impl<B: MonadOps, Op: RetOp<B::F>> RetSlot<B> for Use<Op> {
    fn run<A: Elem>(&self, _base: &B, a: A) -> App<B::F, A> {
        self.0.ret(a)
    }
}

pub trait BindSlot<B: MonadOps>: Clone + 'static {
    fn run<A: Elem, C: Elem>(
        &self,
        base: &B,
        m: App<B::F, A>,
        k: impl ElemFn<A, App<B::F, C>>,
    ) -> App<B::F, C>;
}

impl<B: MonadOps> BindSlot<B> for Keep {
    fn run<A: Elem, C: Elem>(
        &self,
        base: &B,
        m: App<B::F, A>,
        k: impl ElemFn<A, App<B::F, C>>,
    ) -> App<B::F, C> {
        base.bind(m, k)
    }
}

impl<B: MonadOps, Op: BindOp<B::F>> BindSlot<B> for Use<Op> {
    fn run<A: Elem, C: Elem>(
        &self,
        _base: &B,
        m: App<B::F, A>,
        k: impl ElemFn<A, App<B::F, C>>,
    ) -> App<B::F, C> {
        self.0.bind(m, k)
    }
}

/// A full monad bundle with some members replaced. Members without a
/// replacement delegate to the original bundle unchanged.
#[derive(Clone)]
pub struct Overridden<B, Fm = Keep, Pu = Keep, Ap = Keep, Re = Keep, Bi = Keep> {
    base: B,
    slots: MonadOverrides<Fm, Pu, Ap, Re, Bi>,
}

/// Wrap `bundle` so that the members named in `overrides` are replaced and
/// every other member keeps its original definition.
pub fn with_overrides<B, Fm, Pu, Ap, Re, Bi>(
    bundle: B,
    overrides: MonadOverrides<Fm, Pu, Ap, Re, Bi>,
) -> Overridden<B, Fm, Pu, Ap, Re, Bi>
where
    B: MonadOps,
    Fm: FmapSlot<B>,
    Pu: PureSlot<B>,
    Ap: ApplySlot<B>,
    Re: RetSlot<B>,
    Bi: BindSlot<B>,
{
    Overridden { base: bundle, slots: overrides }
}

impl<B, Fm, Pu, Ap, Re, Bi> Bundle for Overridden<B, Fm, Pu, Ap, Re, Bi>
where
    B: MonadOps,
    Fm: FmapSlot<B>,
    Pu: PureSlot<B>,
    Ap: ApplySlot<B>,
    Re: RetSlot<B>,
    Bi: BindSlot<B>,
{
    type F = B::F;
}

impl<B, Fm, Pu, Ap, Re, Bi> FunctorOps for Overridden<B, Fm, Pu, Ap, Re, Bi>
where
    B: MonadOps,
    Fm: FmapSlot<B>,
    Pu: PureSlot<B>,
    Ap: ApplySlot<B>,
    Re: RetSlot<B>,
    Bi: BindSlot<B>,
{
    fn fmap<A: Elem, B2: Elem>(
        &self,
        f: impl ElemFn<A, B2>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B2> {
        self.slots.fmap.run(&self.base, f, fa)
    }

    fn replace_left<A: Elem, B2: Elem>(&self, b: B2, fa: App<Self::F, A>) -> App<Self::F, B2> {
        self.base.replace_left(b, fa)
    }

    fn replace_right<A: Elem, B2: Elem>(&self, fa: App<Self::F, A>, b: B2) -> App<Self::F, B2> {
        self.base.replace_right(fa, b)
    }

    fn void<A: Elem>(&self, fa: App<Self::F, A>) -> App<Self::F, ()> {
        self.base.void(fa)
    }
}

impl<B, Fm, Pu, Ap, Re, Bi> ApplicativeOps for Overridden<B, Fm, Pu, Ap, Re, Bi>
where
    B: MonadOps,
    Fm: FmapSlot<B>,
    Pu: PureSlot<B>,
    Ap: ApplySlot<B>,
    Re: RetSlot<B>,
    Bi: BindSlot<B>,
{
    fn pure<A: Elem>(&self, a: A) -> App<Self::F, A> {
        self.slots.pure.run(&self.base, a)
    }

    fn apply<A: Elem, B2: Elem, G: ElemFn<A, B2>>(
        &self,
        ff: App<Self::F, G>,
        fa: App<Self::F, A>,
    ) -> App<Self::F, B2> {
        self.slots.apply.run(&self.base, ff, fa)
    }

    fn lift_a2<A: Elem, B2: Elem, C: Elem>(
        &self,
        f: impl ElemFn2<A, B2, C>,
        fa: App<Self::F, A>,
        fb: App<Self::F, B2>,
    ) -> App<Self::F, C> {
        self.base.lift_a2(f, fa, fb)
    }

    fn lift_a3<A: Elem, B2: Elem, C: Elem, D: Elem>(
        &self,
        f: impl ElemFn3<A, B2, C, D>,
        fa: App<Self::F, A>,
        fb: App<Self::F, B2>,
        fc: App<Self::F, C>,
    ) -> App<Self::F, D> {
        self.base.lift_a3(f, fa, fb, fc)
    }

    fn seq_right<A: Elem, B2: Elem>(
        &self,
        fa: App<Self::F, A>,
        fb: App<Self::F, B2>,
    ) -> App<Self::F, B2> {
        self.base.seq_right(fa, fb)
    }

    fn seq_left<A: Elem, B2: Elem>(
        &self,
        fa: App<Self::F, A>,
        fb: App<Self::F, B2>,
    ) -> App<Self::F, A> {
        self.base.seq_left(fa, fb)
    }
}

impl<B, Fm, Pu, Ap, Re, Bi> MonadOps for Overridden<B, Fm, Pu, Ap, Re, Bi>
where
    B: MonadOps,
    Fm: FmapSlot<B>,
    Pu: PureSlot<B>,
    Ap: ApplySlot<B>,
    Re: RetSlot<B>,
    Bi: BindSlot<B>,
{
    fn ret<A: Elem>(&self, a: A) -> App<Self::F, A> {
        self.slots.ret.run(&self.base, a)
    }

    fn bind<A: Elem, B2: Elem>(
        &self,
        m: App<Self::F, A>,
        k: impl ElemFn<A, App<Self::F, B2>>,
    ) -> App<Self::F, B2> {
        self.slots.bind.run(&self.base, m, k)
    }

    fn then<A: Elem, B2: Elem>(&self, m: App<Self::F, A>, k: App<Self::F, B2>)
        -> App<Self::F, B2> {
        self.base.then(m, k)
    }

    fn join<A: Elem>(&self, nested: App<Self::F, App<Self::F, A>>) -> App<Self::F, A> {
        self.base.join(nested)
    }

    fn kleisli<A: Elem, B2: Elem, C: Elem>(
        &self,
        f: impl ElemFn<A, App<Self::F, B2>>,
        g: impl ElemFn<B2, App<Self::F, C>>,
    ) -> impl ElemFn<A, App<Self::F, C>> {
        self.base.kleisli(f, g)
    }

    fn kleisli_rev<A: Elem, B2: Elem, C: Elem>(
        &self,
        g: impl ElemFn<B2, App<Self::F, C>>,
        f: impl ElemFn<A, App<Self::F, B2>>,
    ) -> impl ElemFn<A, App<Self::F, C>> {
        self.base.kleisli_rev(g, f)
    }

    fn lift_m<A: Elem, B2: Elem>(
        &self,
        f: impl ElemFn<A, B2>,
        m: App<Self::F, A>,
    ) -> App<Self::F, B2> {
        self.base.lift_m(f, m)
    }

    fn lift_m2<A: Elem, B2: Elem, C: Elem>(
        &self,
        f: impl ElemFn2<A, B2, C>,
        ma: App<Self::F, A>,
        mb: App<Self::F, B2>,
    ) -> App<Self::F, C> {
        self.base.lift_m2(f, ma, mb)
    }

    fn ap<A: Elem, B2: Elem, G: ElemFn<A, B2>>(
        &self,
        mf: App<Self::F, G>,
        ma: App<Self::F, A>,
    ) -> App<Self::F, B2> {
        self.base.ap(mf, ma)
    }

    fn forever<A: Elem, B2: Elem>(&self, m: App<Self::F, A>) -> App<Self::F, B2> {
        self.base.forever(m)
    }

    fn map_m<A: Elem, B2: Elem>(
        &self,
        f: impl ElemFn<A, App<Self::F, B2>>,
        items: Vec<A>,
    ) -> App<Self::F, Vec<B2>> {
        self.base.map_m(f, items)
    }

    fn sequence<A: Elem>(&self, items: Vec<App<Self::F, A>>) -> App<Self::F, Vec<A>> {
        self.base.sequence(items)
    }

    fn filter_m<A: Elem>(
        &self,
        pred: impl ElemFn<A, App<Self::F, bool>>,
        items: Vec<A>,
    ) -> App<Self::F, Vec<A>> {
        self.base.filter_m(pred, items)
    }

    fn replicate_m<A: Elem>(&self, count: usize, m: App<Self::F, A>) -> App<Self::F, Vec<A>> {
        self.base.replicate_m(count, m)
    }

    fn when(&self, cond: bool, m: App<Self::F, ()>) -> App<Self::F, ()> {
        self.base.when(cond, m)
    }

    fn unless(&self, cond: bool, m: App<Self::F, ()>) -> App<Self::F, ()> {
        self.base.unless(cond, m)
    }
}
