#include "cyclocert/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <filesystem>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "cyclocert/bezout.hpp"
#include "cyclocert/certificate_io.hpp"
#include "cyclocert/charcheck.hpp"
#include "cyclocert/cyclotomic.hpp"
#include "cyclocert/decompose.hpp"
#include "cyclocert/errors.hpp"
#include "cyclocert/repring.hpp"

namespace cyclocert {

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + s + "'");
  }
  return v;
}

std::int64_t parse_i64(const std::string& s, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError(std::string(what) + " must be an integer, got '" + s + "'");
  }
  return v;
}

int cmd_phi(std::uint64_t n, std::ostream& out) {
  if (n < 1) {
    throw UsageError("phi needs n >= 1");
  }
  out << to_string(phi_poly(n)) << '\n';
  return kExitPass;
}

int cmd_decompose(std::uint64_t n, const std::string& out_path, bool show_trace,
                  std::ostream& out, std::ostream& err) {
  if (n < 2) {
    throw UsageError("decompose needs n >= 2");
  }
  const DecomposeResult result = decompose(n, DecomposeOptions{show_trace});
  const DecomposeCertificate& cert = result.certificate;

  // The summary goes to stdout when the certificate is written to a file,
  // otherwise stdout carries the certificate and the summary moves to stderr.
  std::ostream& summary = out_path.empty() ? err : out;
  summary << "n=" << n << " primes=";
  for (std::size_t i = 0; i < cert.primes.size(); ++i) {
    summary << (i ? "," : "") << cert.primes[i];
  }
  summary << '\n';
  for (std::size_t i = 0; i < cert.primes.size(); ++i) {
    summary << "  h[p=" << cert.primes[i] << "] degree " << cert.cofactors[i].degree() << '\n';
  }
  if (result.trace) {
    summary << verify_trace(*result.trace);
  }
  if (out_path.empty()) {
    out << serialize_certificate(cert);
  } else {
    write_certificate(out_path, cert);
    summary << "wrote " << out_path << '\n';
  }
  return kExitPass;
}

int cmd_bezout(std::uint64_t a, std::uint64_t b, const std::string& out_path,
               std::ostream& out) {
  if (a < 1 || b < 1) {
    throw UsageError("bezout needs a, b >= 1");
  }
  const BezoutCertificate cert = bezout_xn(a, b);
  if (out_path.empty()) {
    out << serialize_certificate(cert);
  } else {
    write_certificate(out_path, cert);
    out << "d=" << cert.d << " steps=" << cert.trace.steps.size() << "\nwrote " << out_path
        << '\n';
  }
  return kExitPass;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  const Certificate cert = read_certificate(path);
  const CheckReport report = verify_any(cert);
  out << report;
  return report.passed() ? kExitPass : kExitVerificationFailed;
}

int cmd_theorem(std::uint64_t n, std::ostream& out) {
  if (n < 2) {
    throw UsageError("theorem needs n >= 2");
  }
  const CheckReport report = quotient_theorem_report(n);
  out << report;
  return report.passed() ? kExitPass : kExitVerificationFailed;
}

struct SweepOutcome {
  bool passed = false;
  std::string detail;
};

SweepOutcome sweep_one(std::uint64_t n, const std::string& emit_dir) {
  SweepOutcome r;
  try {
    const CheckReport report = theorem_check(n);
    r.passed = report.passed();
    if (const CheckItem* bad = report.first_failure()) {
      r.detail = bad->name + (bad->detail.empty() ? "" : ": " + bad->detail);
    }
    if (!emit_dir.empty()) {
      write_certificate(std::filesystem::path(emit_dir) / ("decompose_" + std::to_string(n) + ".json"),
                        decompose(n));
    }
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

int cmd_sweep(std::uint64_t n_max, unsigned jobs, const std::string& emit_dir,
              std::ostream& out) {
  if (n_max < 2) {
    throw UsageError("sweep needs n_max >= 2");
  }
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
  }
  const std::size_t count = n_max - 1;
  std::vector<SweepOutcome> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      results[i] = sweep_one(i + 2, emit_dir);
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back(worker);
    }
  }

  std::size_t passed = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& r = results[i];
    out << "n=" << (i + 2) << ' ' << (r.passed ? "PASS" : "FAIL");
    if (!r.passed) {
      out << " (" << r.detail << ')';
    }
    out << '\n';
    passed += r.passed ? 1 : 0;
  }
  out << "sweep 2.." << n_max << ": " << passed << " passed, " << (count - passed)
      << " failed\n";
  return passed == count ? kExitPass : kExitVerificationFailed;
}

int cmd_ring(std::uint64_t n, const std::string& op, const std::vector<std::string>& args,
             std::ostream& out) {
  if (n < 1) {
    throw UsageError("ring needs n >= 1");
  }
  auto need = [&](std::size_t k) {
    if (args.size() != k) {
      throw UsageError("ring " + op + " takes " + std::to_string(k) + " arguments");
    }
  };
  if (op == "mul") {
    need(2);
    out << to_string(ring_mul(parse_ring_elem(n, args[0]), parse_ring_elem(n, args[1]))) << '\n';
  } else if (op == "ind") {
    need(2);
    const std::uint64_t d = parse_u64(args[0], "d");
    if (d == 0 || n % d != 0) {
      throw UsageError(args[0] + " does not divide " + std::to_string(n));
    }
    out << to_string(ind(n, d, parse_ring_elem(n / d, args[1]))) << '\n';
  } else if (op == "res") {
    need(2);
    const std::uint64_t d = parse_u64(args[0], "d");
    if (d == 0 || n % d != 0) {
      throw UsageError(args[0] + " does not divide " + std::to_string(n));
    }
    out << to_string(res(n, d, parse_ring_elem(n, args[1]))) << '\n';
  } else if (op == "char") {
    need(2);
    const std::uint64_t d = parse_u64(args[0], "d");
    if (d == 0 || n % d != 0) {
      throw UsageError(args[0] + " does not divide " + std::to_string(n));
    }
    out << to_string(induced_char_value(n, d, parse_i64(args[1], "m"))) << '\n';
  } else {
    throw UsageError("unknown ring operation '" + op + "'");
  }
  return kExitPass;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cyclotomic and representation-ring certificates", "cyclocert"};
  app.require_subcommand(1);

  std::string n_text;
  std::string out_path;
  bool show_trace = false;

  auto* phi = app.add_subcommand("phi", "print the n-th cyclotomic polynomial");
  phi->add_option("n", n_text)->required();

  auto* dec = app.add_subcommand("decompose", "emit a certificate sum P_{n,p} h_p = Phi_n");
  dec->add_option("n", n_text)->required();
  dec->add_option("--out", out_path, "write the certificate to this file");
  dec->add_flag("--trace", show_trace, "check and print the recursion trace");

  std::string a_text, b_text;
  auto* bez = app.add_subcommand("bezout", "emit (X^a-1)A + (X^b-1)B = X^gcd(a,b)-1");
  bez->add_option("a", a_text)->required();
  bez->add_option("b", b_text)->required();
  bez->add_option("--out", out_path, "write the certificate to this file");

  std::string path;
  auto* ver = app.add_subcommand("verify", "verify a certificate file (exit 0 pass, 1 fail, 2 malformed)");
  ver->add_option("path", path)->required();

  auto* thm = app.add_subcommand("theorem", "check <P_{n,d} : d > 1, d | n> = <Phi_n> for one n");
  thm->add_option("n", n_text)->required();

  unsigned jobs = 1;
  std::string emit_dir;
  auto* swp = app.add_subcommand("sweep", "run the theorem check for every n in 2..n_max");
  swp->add_option("n_max", n_text)->required();
  swp->add_option("-j,--jobs", jobs, "worker threads (output order is unaffected)");
  swp->add_option("--emit-dir", emit_dir, "also write each certificate into this directory");

  std::string op;
  std::vector<std::string> ring_args;
  auto* ring = app.add_subcommand("ring", "representation ring of Z/nZ: mul U V | ind D W | res D V | char D M");
  ring->add_option("n", n_text)->required();
  ring->add_option("op", op)->required();
  ring->add_option("args", ring_args);

  std::vector<const char*> argv{"cyclocert"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitMalformed;
  }

  try {
    if (phi->parsed()) {
      return cmd_phi(parse_u64(n_text, "n"), out);
    }
    if (dec->parsed()) {
      return cmd_decompose(parse_u64(n_text, "n"), out_path, show_trace, out, err);
    }
    if (bez->parsed()) {
      return cmd_bezout(parse_u64(a_text, "a"), parse_u64(b_text, "b"), out_path, out);
    }
    if (ver->parsed()) {
      return cmd_verify(path, out);
    }
    if (thm->parsed()) {
      return cmd_theorem(parse_u64(n_text, "n"), out);
    }
    if (swp->parsed()) {
      return cmd_sweep(parse_u64(n_text, "n_max"), jobs, emit_dir, out);
    }
    if (ring->parsed()) {
      return cmd_ring(parse_u64(n_text, "n"), op, ring_args, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const MalformedCertificate& e) {
    err << "malformed certificate: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const BadInput& e) {
    err << "bad input: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitMalformed;
}

} // namespace cyclocert
