//! The higher-kind encoding.
//!
//! Rust has no kind `* -> *` parameters, so a unary type constructor is
//! represented by a zero-data *tag* type implementing [`TyCon`]. The generic
//! associated type [`TyCon::Apply`] maps the tag plus an element type to the
//! concrete container type, e.g. `App<ListTag, i64> = Vec<i64>`.
//!
//! Operation bundles (see [`crate::signatures`]) are ordinary values tied to
//! one tag through [`Bundle`]. Because they are values, several bundles for
//! the same constructor can coexist and be passed around explicitly.

/// Constraint satisfied by every element type stored in a container.
///
/// Function-shaped containers (reader, state, parsers) keep their payload
/// inside `Rc<dyn Fn(..)>`, which forces `'static`, and several derived
/// operations fan one value into many continuations, which forces `Clone`.
pub trait Elem: Clone + 'static {}

impl<T: Clone + 'static> Elem for T {}

/// A unary type constructor, encoded as a zero-data tag.
pub trait TyCon: 'static {
    /// The concrete type obtained by applying this constructor to `A`.
    type Apply<A: Elem>: Elem;
}

/// `App<F, A>` is the container type named by tag `F` at element type `A`.
pub type App<F, A> = <F as TyCon>::Apply<A>;

/// A function that may be stored in containers and continuations.
pub trait ElemFn<A, B>: Fn(A) -> B + Clone + 'static {}

impl<A, B, F: Fn(A) -> B + Clone + 'static> ElemFn<A, B> for F {}

/// Binary variant of [`ElemFn`].
pub trait ElemFn2<A, B, C>: Fn(A, B) -> C + Clone + 'static {}

impl<A, B, C, F: Fn(A, B) -> C + Clone + 'static> ElemFn2<A, B, C> for F {}

/// Ternary variant of [`ElemFn`].
pub trait ElemFn3<A, B, C, D>: Fn(A, B, C) -> D + Clone + 'static {}

impl<A, B, C, D, F: Fn(A, B, C) -> D + Clone + 'static> ElemFn3<A, B, C, D> for F {}

/// A first-class operation bundle tied to one type constructor.
///
/// Bundles are immutable after construction and cheap to clone; derived
/// operations capture clones of the bundle inside the closures they build.
pub trait Bundle: Clone + 'static {
    /// The constructor this bundle provides operations for.
    type F: TyCon;
}
