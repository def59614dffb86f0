#pragma once

// Launch an external command through /bin/sh, feed stdin, capture stdout,
// and enforce a wall-clock timeout (SIGKILL on expiry).

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstring>
#include <stdexcept>
#include <string>

namespace rado {

struct ProcessResult {
  int exitCode = -1;
  bool timedOut = false;
  std::string output;
  double seconds = 0;
};

struct SolverLaunchFailure : std::runtime_error {
  explicit SolverLaunchFailure(const std::string& m) : std::runtime_error("solver launch failed: " + m) {}
};

inline ProcessResult runProcess(const std::string& command, const std::string& stdinData,
                                double timeoutSeconds) {
  int inPipe[2], outPipe[2];
  if (pipe(inPipe) != 0 || pipe(outPipe) != 0) throw SolverLaunchFailure("pipe() failed");

  auto start = std::chrono::steady_clock::now();
  pid_t pid = fork();
  if (pid < 0) throw SolverLaunchFailure("fork() failed");
  if (pid == 0) {
    setpgid(0, 0);
    dup2(inPipe[0], STDIN_FILENO);
    dup2(outPipe[1], STDOUT_FILENO);
    close(inPipe[0]);
    close(inPipe[1]);
    close(outPipe[0]);
    close(outPipe[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(inPipe[0]);
  close(outPipe[1]);

  // Write stdin fully, ignoring EPIPE if the child does not read it.
  signal(SIGPIPE, SIG_IGN);
  size_t written = 0;
  while (written < stdinData.size()) {
    ssize_t w = write(inPipe[1], stdinData.data() + written, stdinData.size() - written);
    if (w <= 0) break;
    written += static_cast<size_t>(w);
  }
  close(inPipe[1]);

  ProcessResult res;
  fcntl(outPipe[0], F_SETFL, O_NONBLOCK);
  auto deadline = start + std::chrono::duration<double>(timeoutSeconds);
  char buf[4096];
  bool childDone = false;
  int status = 0;
  while (true) {
    // Drain available output.
    while (true) {
      ssize_t r = read(outPipe[0], buf, sizeof buf);
      if (r > 0)
        res.output.append(buf, static_cast<size_t>(r));
      else
        break;
    }
    if (childDone) break;
    pid_t w = waitpid(pid, &status, WNOHANG);
    if (w == pid) {
      childDone = true;
      continue;  // final drain
    }
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(-pid, SIGKILL);  // the whole process group: sh and the solver
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      res.timedOut = true;
      break;
    }
    struct pollfd pfd {
      outPipe[0], POLLIN, 0
    };
    poll(&pfd, 1, 20);
  }
  // Drain any remainder after exit.
  while (true) {
    ssize_t r = read(outPipe[0], buf, sizeof buf);
    if (r > 0)
      res.output.append(buf, static_cast<size_t>(r));
    else
      break;
  }
  close(outPipe[0]);
  res.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace rado
