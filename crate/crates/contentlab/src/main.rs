fn main() {
    // behave like a Unix filter when output is piped into head and friends
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(contentlab::cli::main_entry());
}
