#include "process.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <stdexcept>

#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

namespace mrnaopt::detail {

ProcessResult run_with_input(const std::string& command, const std::string& input) {
    // A child that exits before reading its stdin must not kill us.
    static const bool sigpipe_ignored = [] {
        std::signal(SIGPIPE, SIG_IGN);
        return true;
    }();
    (void)sigpipe_ignored;

    int in_pipe[2], out_pipe[2];
    if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0)
        throw std::runtime_error("pipe() failed: " + std::string(std::strerror(errno)));

    pid_t pid = fork();
    if (pid < 0)
        throw std::runtime_error("fork() failed: " + std::string(std::strerror(errno)));

    if (pid == 0) {
        dup2(in_pipe[0], STDIN_FILENO);
        dup2(out_pipe[1], STDOUT_FILENO);
        close(in_pipe[0]);
        close(in_pipe[1]);
        close(out_pipe[0]);
        close(out_pipe[1]);
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }

    close(in_pipe[0]);
    close(out_pipe[1]);

    // Input is small (one sequence line); write it all, then read.
    std::size_t written = 0;
    while (written < input.size()) {
        ssize_t n = write(in_pipe[1], input.data() + written, input.size() - written);
        if (n < 0) {
            if (errno == EINTR)
                continue;
            break; // engine closed stdin early; its output decides the outcome
        }
        written += static_cast<std::size_t>(n);
    }
    close(in_pipe[1]);

    ProcessResult result;
    char buf[4096];
    for (;;) {
        ssize_t n = read(out_pipe[0], buf, sizeof buf);
        if (n < 0) {
            if (errno == EINTR)
                continue;
            close(out_pipe[0]);
            throw std::runtime_error("read() from engine failed");
        }
        if (n == 0)
            break;
        result.output.append(buf, static_cast<std::size_t>(n));
    }
    close(out_pipe[0]);

    int status = 0;
    if (waitpid(pid, &status, 0) < 0)
        throw std::runtime_error("waitpid() failed");
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace mrnaopt::detail
