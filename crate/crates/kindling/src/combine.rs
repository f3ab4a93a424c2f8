//! Functions over several classes at once, and instance construction from
//! recursive constraints.
//!
//! `fold_m` pairs a foldable with a monad; `cons_prod` turns two minimal
//! monads into the minimal monad of their product constructor, the
//! module-level reading of `instance (Monad f, Monad g) => Monad (f :*: g)`.

use alloc::rc::Rc;
use core::marker::PhantomData;

use crate::kind::{App, Bundle, Elem, ElemFn, ElemFn2, TyCon};
use crate::signatures::{FoldableMin, MonadMin};

/// A monadic fold: built from one foldable bundle and one monad bundle.
#[derive(Clone)]
pub struct FoldM<T: FoldableMin, M: MonadMin> {
    foldable: T,
    monad: M,
}

/// Combine a foldable and a monad into a monadic fold.
pub fn fold_m<T: FoldableMin, M: MonadMin>(foldable: T, monad: M) -> FoldM<T, M> {
    FoldM { foldable, monad }
}

impl<T: FoldableMin, M: MonadMin> FoldM<T, M> {
    /// Left-to-right monadic fold: each element's step result is bound before
    /// the next element is visited; an empty container yields `ret(init)`.
    ///
    /// The left fold is derived from `fold_right` by accumulating
    /// continuations of type `B -> M B`.
    pub fn fold<A: Elem, B: Elem>(
        &self,
        step: impl ElemFn2<B, A, App<M::F, B>>,
        init: B,
        items: App<T::F, A>,
    ) -> App<M::F, B> {
        type Chain<F, B> = Rc<dyn Fn(B) -> App<F, B>>;

        let monad = self.monad.clone();
        let done: Chain<M::F, B> = {
            let monad = monad.clone();
            Rc::new(move |b: B| monad.ret(b))
        };
        let chain = self.foldable.fold_right(
            move |a: A, rest: Chain<M::F, B>| -> Chain<M::F, B> {
                let monad = monad.clone();
                let step = step.clone();
                Rc::new(move |b: B| {
                    let rest = rest.clone();
                    monad.bind(step(b, a.clone()), move |b2: B| rest(b2))
                })
            },
            done,
            items,
        );
        chain(init)
    }
}

/// Constructor tag for the product of two constructors: a pair of containers
/// over the same element type.
pub struct ProductTag<F: TyCon, G: TyCon>(PhantomData<(F, G)>);

impl<F: TyCon, G: TyCon> TyCon for ProductTag<F, G> {
    type Apply<A: Elem> = (App<F, A>, App<G, A>);
}

/// The componentwise minimal monad of a product constructor.
#[derive(Clone)]
pub struct ConsProd<L: MonadMin, R: MonadMin> {
    left: L,
    right: R,
}

/// Build the minimal monad for `L::F :*: R::F` from the component bundles.
pub fn cons_prod<L: MonadMin, R: MonadMin>(left: L, right: R) -> ConsProd<L, R> {
    ConsProd { left, right }
}

impl<L: MonadMin, R: MonadMin> ConsProd<L, R> {
    pub fn left(&self) -> &L {
        &self.left
    }

    pub fn right(&self) -> &R {
        &self.right
    }
}

impl<L: MonadMin, R: MonadMin> Bundle for ConsProd<L, R> {
    type F = ProductTag<L::F, R::F>;
}

impl<L: MonadMin, R: MonadMin> MonadMin for ConsProd<L, R> {
    fn ret<A: Elem>(&self, a: A) -> App<Self::F, A> {
        (self.left.ret(a.clone()), self.right.ret(a))
    }

    fn bind<A: Elem, B: Elem>(
        &self,
        m: App<Self::F, A>,
        k: impl ElemFn<A, App<Self::F, B>>,
    ) -> App<Self::F, B> {
        let (ml, mr) = m;
        let kl = k.clone();
        (
            self.left.bind(ml, move |a: A| kl(a).0),
            self.right.bind(mr, move |a: A| k(a).1),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{
        identity_monad_min, list_foldable_min, list_monad_min, option_monad_min, run_state,
        state_get, state_monad_min, state_put,
    };
    use alloc::rc::Rc;
    use alloc::vec;
    use core::cell::Cell;

    #[test]
    fn fold_m_accumulates_left_to_right() {
        let fm = fold_m(list_foldable_min(), option_monad_min());
        let step = |b: i64, a: i64| if a >= 0 { Some(b + a) } else { None };
        assert_eq!(fm.fold(step, 0, vec![1, 2, 3]), Some(6));
    }

    #[test]
    fn fold_m_short_circuits_and_skips_later_elements() {
        let fm = fold_m(list_foldable_min(), option_monad_min());
        let visited = Rc::new(Cell::new(0u32));
        let v = visited.clone();
        let step = move |b: i64, a: i64| {
            v.set(v.get() + 1);
            if a >= 0 {
                Some(b + a)
            } else {
                None
            }
        };
        assert_eq!(fm.fold(step, 0, vec![1, -2, 3]), None);
        // 1 is visited, -2 fails, 3 is never visited.
        assert_eq!(visited.get(), 2);
    }

    #[test]
    fn fold_m_empty_container_returns_init() {
        let fm = fold_m(list_foldable_min(), option_monad_min());
        let step = |b: i64, a: i64| Some(b + a);
        assert_eq!(fm.fold(step, 9, vec![]), Some(9));
    }

    #[test]
    fn fold_m_in_identity_is_plain_left_fold() {
        let fm = fold_m(list_foldable_min(), identity_monad_min());
        let xs = vec![5, -1, 3, 3];
        let folded = fm.fold(|b: i64, a: i64| b * 2 - a, 1, xs.clone());
        let direct = xs.iter().fold(1i64, |b, a| b * 2 - a);
        assert_eq!(folded, direct);
    }

    #[test]
    fn fold_m_in_state_counts_every_element() {
        use crate::signatures::MonadMin as _;
        let monad = state_monad_min::<i64>();
        let fm = fold_m(list_foldable_min(), monad.clone());
        let step = move |b: i64, a: i64| {
            let m = state_monad_min::<i64>();
            let m2 = m.clone();
            m.bind(state_get::<i64>(), move |count: i64| {
                let m3 = m2.clone();
                m2.bind(state_put(count + 1), move |_: ()| m3.ret(b + a))
            })
        };
        let program = fm.fold(step, 0, vec![4, 5, 6]);
        let (total, steps) = run_state(&program, 0);
        assert_eq!(total, 15);
        assert_eq!(steps, 3);
    }

    #[test]
    fn cons_prod_returns_componentwise() {
        let p = cons_prod(option_monad_min(), list_monad_min());
        assert_eq!(p.ret(2), (Some(2), vec![2]));
    }

    #[test]
    fn cons_prod_binds_componentwise() {
        let p = cons_prod(option_monad_min(), list_monad_min());
        let out = p.bind((Some(2), vec![1, 2]), |a: i64| (Some(a + 1), vec![a, a]));
        assert_eq!(out, (Some(3), vec![1, 1, 2, 2]));
    }

    #[test]
    fn cons_prod_absorbing_components() {
        let p = cons_prod(option_monad_min(), list_monad_min());
        let out = p.bind((None, Vec::new()), |a: i64| (Some(a), vec![a]));
        assert_eq!(out, (None, Vec::new()));
    }

    #[test]
    fn cons_prod_nests() {
        let p = cons_prod(cons_prod(option_monad_min(), list_monad_min()), identity_monad_min());
        assert_eq!(p.ret(1), ((Some(1), vec![1]), 1));
    }
}
