fn main() {
    // Exit quietly when the read end of a pipe goes away.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(softtop::cli::run());
}
