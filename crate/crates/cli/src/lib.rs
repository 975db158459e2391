//! Expression language and command-line verbs for `cayley`.

pub mod app;
pub mod expr;

pub use app::{run, Outcome};
pub use expr::{eval_expr, parse_expr, Expr, ExprError, Value};
