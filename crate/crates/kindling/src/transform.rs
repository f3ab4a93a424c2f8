//! Monad transformers as bundle-to-bundle functions.
//!
//! A transformer takes the minimal definition of a base monad (plus a type
//! parameter: the state type, the error type) and produces the minimal
//! definition of the transformed monad, embellished with the base bundle and
//! a `lift` embedding base computations. Stacks are built by nesting calls —
//! `state_t(except_t(identity_monad_min()))` and so on — there is no lifting
//! machinery beyond `lift` itself.

use alloc::rc::Rc;
use core::marker::PhantomData;

use crate::kind::{App, Bundle, Elem, ElemFn, TyCon};
use crate::signatures::MonadMin;

/// A minimal monad for a transformed constructor, carrying the base bundle
/// it was built from and the `lift` embedding.
pub trait TransformedMonadMin: MonadMin {
    type Base: MonadMin;

    fn base(&self) -> &Self::Base;

    /// Embed a base computation into the transformed monad.
    ///
    /// Laws (checked by the law suite): `lift(base.ret(a)) == ret(a)` and
    /// `lift(base.bind(m, k)) == bind(lift(m), lift . k)`.
    fn lift<A: Elem>(&self, m: App<<Self::Base as Bundle>::F, A>) -> App<Self::F, A>;
}

// ---------------------------------------------------------------------------
// State transformer
// ---------------------------------------------------------------------------

/// Constructor tag for state-transformed computations:
/// `S -> M (A, S)` over the base constructor `F0`.
pub struct StateTTag<S: Elem, F0: TyCon>(PhantomData<(S, F0)>);

impl<S: Elem, F0: TyCon> TyCon for StateTTag<S, F0> {
    type Apply<A: Elem> = Rc<dyn Fn(S) -> App<F0, (A, S)>>;
}

/// The state monad transformer applied to a base monad.
pub struct StateT<S: Elem, M: MonadMin> {
    base: M,
    _state: PhantomData<S>,
}

impl<S: Elem, M: MonadMin> Clone for StateT<S, M> {
    fn clone(&self) -> Self {
        StateT { base: self.base.clone(), _state: PhantomData }
    }
}

/// Build the state-transformed minimal monad over `base`. The state type is
/// the `S` parameter.
pub fn state_t<S: Elem, M: MonadMin>(base: M) -> StateT<S, M> {
    StateT { base, _state: PhantomData }
}

impl<S: Elem, M: MonadMin> Bundle for StateT<S, M> {
    type F = StateTTag<S, M::F>;
}

impl<S: Elem, M: MonadMin> MonadMin for StateT<S, M> {
    fn ret<A: Elem>(&self, a: A) -> App<Self::F, A> {
        let base = self.base.clone();
        Rc::new(move |s: S| base.ret((a.clone(), s)))
    }

    fn bind<A: Elem, B: Elem>(
        &self,
        m: App<Self::F, A>,
        k: impl ElemFn<A, App<Self::F, B>>,
    ) -> App<Self::F, B> {
        let base = self.base.clone();
        Rc::new(move |s: S| {
            let k = k.clone();
            base.bind(m(s), move |(a, s2): (A, S)| (k(a))(s2))
        })
    }
}

impl<S: Elem, M: MonadMin> TransformedMonadMin for StateT<S, M> {
    type Base = M;

    fn base(&self) -> &M {
        &self.base
    }

    fn lift<A: Elem>(&self, m: App<M::F, A>) -> App<Self::F, A> {
        let base = self.base.clone();
        Rc::new(move |s: S| {
            let inner = base.clone();
            base.bind(m.clone(), move |a: A| inner.ret((a, s.clone())))
        })
    }
}

impl<S: Elem, M: MonadMin> StateT<S, M> {
    pub fn get(&self) -> App<<Self as Bundle>::F, S> {
        let base = self.base.clone();
        Rc::new(move |s: S| base.ret((s.clone(), s)))
    }

    pub fn put(&self, next: S) -> App<<Self as Bundle>::F, ()> {
        let base = self.base.clone();
        Rc::new(move |_| base.ret(((), next.clone())))
    }

    pub fn modify(&self, f: impl ElemFn<S, S>) -> App<<Self as Bundle>::F, ()> {
        let base = self.base.clone();
        Rc::new(move |s| base.ret(((), f(s))))
    }

    /// Run a transformed computation from an initial state.
    pub fn run<A: Elem>(&self, m: &App<<Self as Bundle>::F, A>, init: S) -> App<M::F, (A, S)> {
        m(init)
    }
}

// ---------------------------------------------------------------------------
// Error transformer
// ---------------------------------------------------------------------------

/// Constructor tag for error-transformed computations: `M (Either E A)`.
pub struct ExceptTTag<E: Elem, F0: TyCon>(PhantomData<(E, F0)>);

impl<E: Elem, F0: TyCon> TyCon for ExceptTTag<E, F0> {
    type Apply<A: Elem> = App<F0, Result<A, E>>;
}

/// The error monad transformer applied to a base monad.
pub struct ExceptT<E: Elem, M: MonadMin> {
    base: M,
    _err: PhantomData<E>,
}

impl<E: Elem, M: MonadMin> Clone for ExceptT<E, M> {
    fn clone(&self) -> Self {
        ExceptT { base: self.base.clone(), _err: PhantomData }
    }
}

/// Build the error-transformed minimal monad over `base`. The error type is
/// the `E` parameter.
pub fn except_t<E: Elem, M: MonadMin>(base: M) -> ExceptT<E, M> {
    ExceptT { base, _err: PhantomData }
}

impl<E: Elem, M: MonadMin> Bundle for ExceptT<E, M> {
    type F = ExceptTTag<E, M::F>;
}

impl<E: Elem, M: MonadMin> MonadMin for ExceptT<E, M> {
    fn ret<A: Elem>(&self, a: A) -> App<Self::F, A> {
        self.base.ret(Ok(a))
    }

    fn bind<A: Elem, B: Elem>(
        &self,
        m: App<Self::F, A>,
        k: impl ElemFn<A, App<Self::F, B>>,
    ) -> App<Self::F, B> {
        let base = self.base.clone();
        self.base.bind(m, move |r: Result<A, E>| match r {
            Ok(a) => k(a),
            Err(e) => base.ret(Err(e)),
        })
    }
}

impl<E: Elem, M: MonadMin> TransformedMonadMin for ExceptT<E, M> {
    type Base = M;

    fn base(&self) -> &M {
        &self.base
    }

    fn lift<A: Elem>(&self, m: App<M::F, A>) -> App<Self::F, A> {
        let base = self.base.clone();
        self.base.bind(m, move |a: A| base.ret(Ok(a)))
    }
}

impl<E: Elem, M: MonadMin> ExceptT<E, M> {
    pub fn throw<A: Elem>(&self, e: E) -> App<<Self as Bundle>::F, A> {
        self.base.ret(Err(e))
    }

    /// Run `m`; on failure hand the error to `handler`.
    pub fn catch<A: Elem>(
        &self,
        m: App<<Self as Bundle>::F, A>,
        handler: impl ElemFn<E, App<<Self as Bundle>::F, A>>,
    ) -> App<<Self as Bundle>::F, A> {
        let base = self.base.clone();
        self.base.bind(m, move |r: Result<A, E>| match r {
            Ok(a) => base.ret(Ok(a)),
            Err(e) => handler(e),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elaborate::mk_monad;
    use crate::instances::{identity_monad_min, option_monad_min};
    use crate::signatures::MonadOps;
    use alloc::vec;
    use alloc::vec::Vec;
    use core::cell::Cell;

    #[test]
    fn state_t_identity_threads_state() {
        let st = state_t::<i64, _>(identity_monad_min());
        let prog = st.bind(st.get(), {
            let st = st.clone();
            move |s: i64| st.put(s * 2)
        });
        assert_eq!(st.run(&prog, 3), ((), 6));
    }

    #[test]
    fn state_t_option_pop_on_empty_stack_fails() {
        let st = state_t::<Vec<i64>, _>(option_monad_min());
        // pop: read the stack; if empty, lift the failed base computation.
        let pop = {
            let st2 = st.clone();
            st.bind(st.get(), move |stack: Vec<i64>| {
                if stack.is_empty() {
                    st2.lift(None)
                } else {
                    let mut rest = stack.clone();
                    let top = rest.pop().unwrap();
                    st2.bind(st2.put(rest), {
                        let st3 = st2.clone();
                        move |_: ()| st3.ret(top)
                    })
                }
            })
        };
        assert_eq!(st.run(&pop, Vec::new()), None);
        assert_eq!(st.run(&pop, vec![1, 2, 7]), Some((7, vec![1, 2])));
    }

    #[test]
    fn state_t_lift_pairs_value_with_state() {
        let st = state_t::<i64, _>(option_monad_min());
        let lifted = st.lift(Some(7));
        assert_eq!(st.run(&lifted, 40), Some((7, 40)));
        let failed = st.lift(None::<i64>);
        assert_eq!(st.run(&failed, 40), None);
    }

    #[test]
    fn state_t_lift_laws_spot_checks() {
        let base = option_monad_min();
        let st = state_t::<i64, _>(base);
        // lift . ret == ret
        for s in [-2, 0, 5] {
            let lhs = st.lift(Some(9));
            let rhs = st.ret(9);
            assert_eq!(st.run(&lhs, s), st.run(&rhs, s));
        }
        // lift (m >>= k) == lift m >>= lift . k
        let m = Some(4);
        let k = |x: i64| if x > 0 { Some(x * 3) } else { None };
        use crate::signatures::MonadMin as _;
        let lhs = st.lift(option_monad_min().bind(m, k));
        let st2 = st.clone();
        let rhs = st.bind(st.lift(m), move |a: i64| st2.lift(k(a)));
        for s in [-2, 0, 5] {
            assert_eq!(st.run(&lhs, s), st.run(&rhs, s));
        }
    }

    #[test]
    fn except_t_throw_absorbs_bind() {
        let et = except_t::<&'static str, _>(identity_monad_min());
        let boom = et.throw::<i64>("boom");
        let out = et.bind(boom, |x: i64| et_ret(x + 1));
        assert_eq!(out, Err("boom"));

        fn et_ret(x: i64) -> Result<i64, &'static str> {
            except_t::<&'static str, _>(identity_monad_min()).ret(x)
        }
    }

    #[test]
    fn except_t_catch_runs_handler() {
        let et = except_t::<&'static str, _>(identity_monad_min());
        let et2 = et.clone();
        let recovered = et.catch(et.throw::<i64>("e"), move |_| et2.ret(1));
        assert_eq!(recovered, Ok(1));
        let et3 = et.clone();
        let untouched = et.catch(et.ret(5), move |_| et3.ret(0));
        assert_eq!(untouched, Ok(5));
    }

    #[test]
    fn except_t_lift_wraps_in_ok() {
        let et = except_t::<&'static str, _>(identity_monad_min());
        assert_eq!(et.lift(5), Ok::<i64, &'static str>(5));
    }

    #[test]
    fn except_t_over_option_stacks() {
        // Two transformers worth of structure: option base, error layer on top.
        let et = except_t::<&'static str, _>(option_monad_min());
        assert_eq!(et.ret(1), Some(Ok::<i64, &'static str>(1)));
        assert_eq!(et.throw::<i64>("e"), Some(Err("e")));
        assert_eq!(et.lift(None::<i64>), None);
    }

    #[test]
    fn forever_terminates_on_the_counting_stack() {
        // state_t over option: decrement a counter, fail at zero. forever
        // then runs exactly `counter` successful iterations before the
        // failure stops it.
        let st = state_t::<i64, _>(option_monad_min());
        let runs = Rc::new(Cell::new(0u64));
        let step: App<<StateT<i64, crate::instances::OptionMonadMin> as Bundle>::F, ()> = {
            let runs = runs.clone();
            Rc::new(move |s: i64| {
                if s == 0 {
                    None
                } else {
                    runs.set(runs.get() + 1);
                    Some(((), s - 1))
                }
            })
        };
        let monad = mk_monad(st.clone());
        let looped = monad.forever::<(), ()>(step);
        let counter = 100;
        assert_eq!(st.run(&looped, counter), None);
        assert_eq!(runs.get(), counter as u64);
    }
}
