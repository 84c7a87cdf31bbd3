//! Text syntax shared by the library and the command line.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? int)?
//! atom  := int | 't' | 'x' | 'y' | '(' expr ')'
//! auto  := 'x' '->' expr ';' 'y' '->' expr
//! word  := ('A' | 'B') ':' auto (';' ('A' | 'B') ':' auto)*
//! pset  := inter ('|' inter)*
//! inter := patom ('&' patom)*
//! patom := '{' int (',' int)* '}' | '{' '}' | int '..' int | 'ppowers' | 'pmult'
//!        | 'all' | 'empty' | 'scaled' '(' int ',' int ')' | 'scaledall' '(' int ')'
//!        | 'ppair' '(' int ')' | '(' pset ')'
//! ```
//!
//! Division is allowed only by expressions in `t`. Every value prints in a
//! form that parses back to an equal value.

mod lexer;
mod parse;

pub use parse::{parse_kauto, parse_kpoly, parse_kword, parse_pset, parse_ratfunc, parse_rauto, parse_rpoly, parse_tpoly};
