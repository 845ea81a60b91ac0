// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

fn main() {
    let code = qact::cli::run_cli(
        std::env::args_os(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    std::process::exit(code);
}
