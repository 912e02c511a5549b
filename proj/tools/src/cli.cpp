#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hb/errors.hpp"
#include "hb/symbol_format.hpp"
#include "json_io.hpp"
#include "verify.hpp"

namespace hbtool {

namespace {

struct RunConfig {
  std::string symbol;
  std::size_t n = 0;
  std::string A = "0";
  std::string B = "1";
  std::string precision;
  std::string format = "json";
  std::string output;
  std::vector<std::size_t> sizes{64, 256, 1024};
  std::uint64_t seed = 42;
  bool verify = false;
};

std::string shortest(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw hb::PreconditionViolated("cannot open output file '" + path + "'");
    }
    out_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void emit(const RunConfig& cfg, std::ostream& out, const ordered_json& j) {
  Sink sink(cfg.output, out);
  sink.stream() << j.dump(2) << '\n';
}

int cmd_basis(const RunConfig& cfg, std::ostream& out) {
  const auto phi = hb::parse_symbol(cfg.symbol);
  const auto basis = hb::orthobasis(phi, cfg.n, hb::parse_precision(cfg.precision));
  if (cfg.format == "csv") {
    Sink sink(cfg.output, out);
    auto& s = sink.stream();
    s << "degree,k,re,im\n";
    for (const auto& p : basis.polys) {
      for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
        const auto c = p.coefficients.coeffs[k];
        s << p.degree << ',' << k << ',' << shortest(c.real()) << ',' << shortest(c.imag()) << '\n';
      }
    }
    return kOk;
  }
  emit(cfg, out, to_json(basis));
  return kOk;
}

int cmd_gram(const RunConfig& cfg, std::ostream& out) {
  const auto m = hb::gram_matrix(hb::parse_symbol(cfg.symbol), cfg.n);
  if (cfg.format == "csv") {
    Sink sink(cfg.output, out);
    auto& s = sink.stream();
    for (std::size_t j = 0; j < m.size(); ++j) {
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (k) s << ',';
        s << shortest(m(j, k).real()) << ',' << shortest(m(j, k).imag());
      }
      s << '\n';
    }
    return kOk;
  }
  emit(cfg, out, to_json(m));
  return kOk;
}

int cmd_recurrence(const RunConfig& cfg, std::ostream& out) {
  const hb::cd a = hb::parse_complex(cfg.A);
  const hb::cd b = hb::parse_complex(cfg.B);
  const auto data = hb::build_recurrence(a, b);
  ordered_json j;
  j["data"] = to_json(data);
  std::optional<hb::OrthoPoly<hb::cd>> p;
  try {
    p = hb::coefficients_via_recurrence(data, cfg.n, hb::parse_precision(cfg.precision));
    j["source"] = "recurrence";
  } catch (const hb::CaseBoundary&) {
    p = hb::orthopoly(hb::SmirnovSymbol::simple_pole(a, b), cfg.n, hb::parse_precision(cfg.precision));
    j["source"] = "oracle";
  }
  const double residual = hb::recurrence_residual(data, *p);
  j["polynomial"] = to_json(*p, residual);
  j["recurrence_residual"] = residual;
  bool ok = true;
  if (cfg.verify) {
    const auto replay = hb::reduced_matrix_check(a, b, std::max<std::size_t>(cfg.n, 4));
    const auto oracle = hb::orthopoly(hb::SmirnovSymbol::simple_pole(a, b), cfg.n, hb::Precision::hp);
    double gap = 0.0;
    for (std::size_t k = 0; k <= cfg.n; ++k) {
      gap = std::max(gap, std::abs(oracle.coefficients.coeffs[k] - p->coefficients.coeffs[k]));
    }
    ok = replay.matches && gap <= 1e-9 && residual <= 1e-10;
    j["verify"] = {{"replay_matches", replay.matches},
                   {"replay_deviation", replay.max_deviation},
                   {"replay_scale", replay.scale},
                   {"oracle_gap", gap},
                   {"passed", ok}};
    if (!replay.matches) j["verify"]["diagnostic"] = replay.diagnostic;
  }
  emit(cfg, out, j);
  return ok ? kOk : kVerificationFailed;
}

int cmd_structure(const RunConfig& cfg, std::ostream& out) {
  const auto report = hb::detect_structure(hb::parse_symbol(cfg.symbol), cfg.n);
  if (cfg.format == "text") {
    Sink sink(cfg.output, out);
    sink.stream() << hb::format_report(report);
    return kOk;
  }
  emit(cfg, out, to_json(report));
  return kOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  const auto rows = hb::bench_solvers(hb::parse_symbol(cfg.symbol), cfg.sizes);
  if (cfg.format == "json") {
    emit(cfg, out, to_json(rows));
  } else {
    Sink sink(cfg.output, out);
    hb::write_bench_csv(sink.stream(), rows);
  }
  bool ok = true;
  for (const auto& r : rows) ok = ok && (r.agree || r.dense_status != "ok");
  return ok ? kOk : kVerificationFailed;
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  auto arr = ordered_json::array();
  for (const auto& e : hb::catalog()) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : e.parameters) params[k] = v;
    arr.push_back({{"name", e.name},
                   {"symbol", hb::format_symbol(e.phi)},
                   {"closed_form", e.closed_form.empty() ? ordered_json(nullptr) : ordered_json(e.closed_form)},
                   {"parameters", params},
                   {"pythagorean_defect", hb::pythagorean_defect(e)}});
  }
  emit(cfg, out, arr);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto checks = run_verify_suite(cfg.seed);
  bool all = true;
  auto arr = ordered_json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    ordered_json item{{"name", c.name}, {"passed", c.passed}, {"worst", c.worst}, {"tolerance", c.tolerance}};
    if (!c.note.empty()) item["note"] = c.note;
    arr.push_back(std::move(item));
  }
  emit(cfg, out, {{"seed", cfg.seed}, {"checks", arr}, {"passed", all}});
  return all ? kOk : kVerificationFailed;
}

std::string default_precision() {
  const char* env = std::getenv("HB_PRECISION");
  return env ? std::string(env) : std::string("auto");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.precision = default_precision();

  CLI::App app{"Orthonormal polynomial bases of de Branges-Rovnyak spaces", "hbtool"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  const std::string symbol_help = "symbol as 'A ; (B, zeta, d) ; ...' with complex numbers written re+imi";
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "f64, hp or auto (default: $HB_PRECISION or auto)")
        ->check(CLI::IsMember({"f64", "hp", "auto"}));
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output", cfg.output, "write to this file"); };

  auto* basis = app.add_subcommand("basis", "orthonormal basis p_0..p_n from the dense oracle");
  basis->add_option("--symbol", cfg.symbol, symbol_help)->required();
  basis->add_option("--n", cfg.n, "highest degree")->required();
  add_precision(basis);
  basis->add_option("--out", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_output(basis);

  auto* gram = app.add_subcommand("gram", "Gram matrix of 1, z, ..., z^n");
  gram->add_option("--symbol", cfg.symbol, symbol_help)->required();
  gram->add_option("--n", cfg.n, "highest degree")->required();
  gram->add_option("--out", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_output(gram);

  auto* rec = app.add_subcommand("recurrence", "p_n for A + B/(1-z) from the three-term recurrence");
  rec->add_option("--A", cfg.A, "constant term");
  rec->add_option("--B", cfg.B, "pole coefficient (nonzero)");
  rec->add_option("--n", cfg.n, "degree")->required();
  rec->add_flag("--verify", cfg.verify, "replay the row reduction and compare with the oracle");
  add_precision(rec);
  add_output(rec);

  auto* structure = app.add_subcommand("structure", "band structure of the shift-reduced Gram system");
  structure->add_option("--symbol", cfg.symbol, symbol_help)->required();
  structure->add_option("--n", cfg.n, "highest degree")->required();
  structure->add_option("--report", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  add_output(structure);

  auto* bench = app.add_subcommand("bench", "dense oracle versus structured solver timings");
  bench->add_option("--symbol", cfg.symbol, symbol_help)->required();
  bench->add_option("--sizes", cfg.sizes, "comma separated degrees")->delimiter(',');
  bench->add_option("--out", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_output(bench);

  auto* cat = app.add_subcommand("catalog", "built-in Pythagorean pairs and their closed forms");
  add_output(cat);

  auto* verify = app.add_subcommand("verify", "cross-check closed forms, recurrence and structured solver");
  verify->add_option("--seed", cfg.seed, "seed for randomized cases");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (bench->parsed() && !bench->count("--out")) cfg.format = "csv";
  if (structure->parsed() && !structure->count("--report")) cfg.format = "json";

  try {
    hb::parse_precision(cfg.precision);
    if (basis->parsed()) return cmd_basis(cfg, out);
    if (gram->parsed()) return cmd_gram(cfg, out);
    if (rec->parsed()) return cmd_recurrence(cfg, out);
    if (structure->parsed()) return cmd_structure(cfg, out);
    if (bench->parsed()) return cmd_bench(cfg, out);
    if (cat->parsed()) return cmd_catalog(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  err << app.help();
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hbtool
