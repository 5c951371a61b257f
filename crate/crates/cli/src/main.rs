use std::process::ExitCode;

fn main() -> ExitCode {
    multilayer_order_cli::cli::main_with_args(std::env::args_os())
}
