//! File formats, Graphviz export and the `doxa` command line.

pub mod commands;
pub mod dot;
pub mod files;

pub use commands::{run, Invocation, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK};
pub use dot::{export_dot, DotOptions};
pub use files::{load_game, load_model, parse_game, parse_model, Game, GameFile, InputError, Model, ModelFile};
