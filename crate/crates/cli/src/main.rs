fn main() {
    let args: Vec<String> = std::env::args().collect();
    let (code, text) = autotame_cli::run(&args);
    // Batch output interleaves results and errors, so it all goes to stdout.
    if code == 0 || args.iter().any(|a| a == "batch") {
        println!("{text}");
    } else {
        eprintln!("{text}");
    }
    std::process::exit(code);
}
