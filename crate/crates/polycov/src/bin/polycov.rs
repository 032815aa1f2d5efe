fn main() {
    // behave like a normal unix filter when the read end of a pipe closes
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(polycov::cli::run(std::env::args()));
}
