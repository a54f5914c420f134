#include "parachk/solver.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>

#include "parachk/error.hpp"

namespace parachk {

SolverConfig default_solver_config() {
  SolverConfig cfg;
  if (const char* env = std::getenv("PARACHK_SOLVER"); env && *env) cfg.command = env;
  return cfg;
}

std::string to_string(RawResult::Status s) {
  switch (s) {
    case RawResult::Status::Sat: return "sat";
    case RawResult::Status::Unsat: return "unsat";
    case RawResult::Status::Unknown: return "unknown";
    case RawResult::Status::Timeout: return "timeout";
    case RawResult::Status::Error: return "error";
  }
  return "?";
}

namespace {

struct Pipe {
  int fd[2] = {-1, -1};
  Pipe() {
    if (::pipe2(fd, O_CLOEXEC) != 0) throw SolverError(std::string("pipe: ") + std::strerror(errno));
  }
  ~Pipe() { close_both(); }
  void close_end(int i) {
    if (fd[i] >= 0) ::close(fd[i]);
    fd[i] = -1;
  }
  void close_both() {
    close_end(0);
    close_end(1);
  }
};

void set_nonblocking(int fd) { ::fcntl(fd, F_SETFL, ::fcntl(fd, F_GETFL) | O_NONBLOCK); }

void classify(RawResult& r) {
  std::size_t i = 0;
  const std::string& out = r.output;
  while (i < out.size() && std::isspace(static_cast<unsigned char>(out[i]))) ++i;
  std::size_t end = out.find('\n', i);
  std::string first = out.substr(i, end == std::string::npos ? std::string::npos : end - i);
  while (!first.empty() && std::isspace(static_cast<unsigned char>(first.back()))) first.pop_back();
  if (first == "sat") {
    r.status = RawResult::Status::Sat;
    r.model = end == std::string::npos ? "" : out.substr(end + 1);
  } else if (first == "unsat") {
    r.status = RawResult::Status::Unsat;
  } else if (first == "unknown") {
    r.status = RawResult::Status::Unknown;
  } else if (first == "timeout") {
    r.status = RawResult::Status::Timeout;
  } else {
    r.status = RawResult::Status::Error;
  }
}

}  // namespace

RawResult run_solver(const SmtScript& script, const SolverConfig& cfg) {
  return run_solver(script.text(), cfg);
}

RawResult run_solver(const std::string& script, const SolverConfig& cfg) {
  if (cfg.timeout_ms <= 0) throw SolverError("timeout must be positive");
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::milliseconds(cfg.timeout_ms);

  Pipe in, out, err;
  pid_t pid = ::fork();
  if (pid < 0) throw SolverError(std::string("fork: ") + std::strerror(errno));
  if (pid == 0) {
    ::dup2(in.fd[0], 0);
    ::dup2(out.fd[1], 1);
    ::dup2(err.fd[1], 2);
    std::string cmd = "exec " + cfg.command;
    ::execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  in.close_end(0);
  out.close_end(1);
  err.close_end(1);
  set_nonblocking(in.fd[1]);
  set_nonblocking(out.fd[0]);
  set_nonblocking(err.fd[0]);

  RawResult r;
  std::string errors;
  std::size_t written = 0;
  bool timed_out = false;
  if (script.empty()) in.close_end(1);

  char buf[8192];
  while (out.fd[0] >= 0 || err.fd[0] >= 0) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
    if (left <= 0) {
      timed_out = true;
      break;
    }
    pollfd fds[3];
    int n = 0;
    int idx_in = -1, idx_out = -1, idx_err = -1;
    if (in.fd[1] >= 0) fds[idx_in = n++] = {in.fd[1], POLLOUT, 0};
    if (out.fd[0] >= 0) fds[idx_out = n++] = {out.fd[0], POLLIN, 0};
    if (err.fd[0] >= 0) fds[idx_err = n++] = {err.fd[0], POLLIN, 0};
    int ready = ::poll(fds, n, static_cast<int>(std::min<long long>(left, 1000)));
    if (ready < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (idx_in >= 0 && fds[idx_in].revents) {
      if (fds[idx_in].revents & (POLLERR | POLLHUP)) {
        in.close_end(1);
      } else {
        ssize_t k = ::write(in.fd[1], script.data() + written, script.size() - written);
        if (k > 0) written += static_cast<std::size_t>(k);
        else if (k < 0 && errno != EAGAIN && errno != EINTR) in.close_end(1);
        if (written == script.size()) in.close_end(1);
      }
    }
    auto drain = [&](int idx, Pipe& p, std::string& sink) {
      if (idx < 0 || !fds[idx].revents) return;
      ssize_t k = ::read(p.fd[0], buf, sizeof buf);
      if (k > 0) sink.append(buf, static_cast<std::size_t>(k));
      else if (k == 0 || (errno != EAGAIN && errno != EINTR)) p.close_end(0);
    };
    drain(idx_out, out, r.output);
    drain(idx_err, err, errors);
  }

  int status = 0;
  if (timed_out) ::kill(pid, SIGKILL);
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  if (timed_out) {
    r.status = RawResult::Status::Timeout;
    return r;
  }
  if (WIFEXITED(status) && WEXITSTATUS(status) == 127 && r.output.empty())
    throw SolverError("cannot run solver '" + cfg.command + "': " + errors);
  classify(r);
  if (r.status == RawResult::Status::Error && !errors.empty()) r.output += errors;
  return r;
}

}  // namespace parachk
