// Command-line front end; talks to the library exclusively through the C API.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scld/scld.h"

namespace {

int exit_code_of(scld_status status) {
  switch (status) {
    case SCLD_OK: return 0;
    case SCLD_ERROR_INVALID_INPUT:
    case SCLD_ERROR_IO: return 2;
    case SCLD_ERROR_GUARD: return 3;
    default: return 1;
  }
}

[[noreturn]] void die(scld_status status) {
  std::cerr << "error (" << scld_status_name(status) << "): " << scld_last_error()
            << "\n";
  std::exit(exit_code_of(status));
}

void check(scld_status status) {
  if (status != SCLD_OK) die(status);
}

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { scld_string_free(text); }
  std::string str() const { return text ? text : ""; }
};

struct OwnedComplex {
  scld_complex* handle = nullptr;
  ~OwnedComplex() { scld_complex_free(handle); }
};

struct OwnedModel {
  scld_model* handle = nullptr;
  ~OwnedModel() { scld_model_free(handle); }
};

void load_complex(const std::string& path, OwnedComplex& out) {
  check(scld_complex_read_file(path.c_str(), &out.handle));
}

std::vector<const char*> c_strings(const std::vector<std::string>& items) {
  std::vector<const char*> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(s.c_str());
  return out;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    std::exit(2);
  }
  f << text;
}

void make_model(std::int32_t n, const std::vector<double>& probs,
                const std::vector<std::string>& alphas, int kmax, OwnedModel& out) {
  if (!alphas.empty()) {
    auto ptrs = c_strings(alphas);
    if (kmax <= 0) kmax = static_cast<int>(alphas.size());
    check(scld_model_from_alphas(n, ptrs.data(), static_cast<int32_t>(ptrs.size()),
                                 kmax, &out.handle));
  } else if (!probs.empty()) {
    check(scld_model_from_probs(n, probs.data(), static_cast<int32_t>(probs.size()),
                                &out.handle));
  } else {
    std::cerr << "error: provide --p or --alpha\n";
    std::exit(2);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-parameter random simplicial complexes: sampling, subcomplex "
               "counts, extremal thresholds, Betti numbers and tail experiments"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::uint64_t seed = 1;
  int threads = 1;
  std::string out_path;
  std::string format = "json";
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--threads", threads, "worker threads")->capture_default_str();
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "draw one complex from K(n; p)");
  std::int32_t n = 0;
  int kmax = 0;
  std::vector<double> probs;
  std::vector<std::string> alphas;
  sample_cmd->add_option("--n", n, "vertex count")->required();
  sample_cmd->add_option("--p", probs, "probabilities p1,p2,...")->delimiter(',');
  sample_cmd->add_option("--alpha", alphas, "exponents a1,a2,... (p_i = n^-a_i)")
      ->delimiter(',');
  sample_cmd->add_option("--kmax", kmax, "maximum tracked dimension");

  // count
  auto* count_cmd = app.add_subcommand("count", "copies of a pattern in a host");
  std::string host_path, pattern_path;
  bool ordered = false;
  count_cmd->add_option("--host", host_path, "host complex file")->required();
  count_cmd->add_option("--pattern", pattern_path, "pattern complex file")->required();
  count_cmd->add_flag("--ordered", ordered, "report the ordered count");

  // mean
  auto* mean_cmd = app.add_subcommand("mean", "expected copy counts and Psi");
  mean_cmd->add_option("--n", n, "vertex count")->required();
  mean_cmd->add_option("--p", probs, "probabilities")->delimiter(',');
  mean_cmd->add_option("--alpha", alphas, "exponents")->delimiter(',');
  mean_cmd->add_option("--kmax", kmax, "maximum tracked dimension");
  mean_cmd->add_option("--pattern", pattern_path, "pattern complex file")->required();

  // gamma
  auto* gamma_cmd = app.add_subcommand("gamma", "vertex-weight LP value and duals");
  std::vector<std::string> bounds_text;
  std::int64_t exponent_base = 0;
  gamma_cmd->add_option("--pattern", pattern_path, "pattern complex file")->required();
  gamma_cmd->add_option("--bounds", bounds_text,
                        "per-dimension bounds m0,m1,... (exponents in exponent mode)")
      ->delimiter(',')
      ->required();
  gamma_cmd->add_option("--exponent-base", exponent_base,
                        "exact mode: bounds are base^{beta_i}");

  // oracle-n
  auto* oracle_cmd = app.add_subcommand("oracle-n", "exhaustive extremal parameter");
  oracle_cmd->add_option("--pattern", pattern_path, "pattern complex file")->required();
  oracle_cmd->add_option("--bounds", bounds_text, "integer bounds m0,m1,...")
      ->delimiter(',')
      ->required();

  // mstar
  auto* mstar_cmd = app.add_subcommand("mstar", "threshold M* and per-H map");
  bool oracle_mode = false;
  mstar_cmd->add_option("--n", n, "vertex count")->required();
  mstar_cmd->add_option("--alpha", alphas, "exponents")->delimiter(',');
  mstar_cmd->add_option("--p", probs, "probabilities")->delimiter(',');
  mstar_cmd->add_option("--kmax", kmax, "maximum tracked dimension");
  mstar_cmd->add_option("--pattern", pattern_path, "pattern complex file")->required();
  mstar_cmd->add_flag("--oracle", oracle_mode, "use the exhaustive oracle");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "M* across an n grid, as CSV");
  std::vector<std::int32_t> ngrid;
  sweep_cmd->add_option("--pattern", pattern_path, "pattern complex file")->required();
  sweep_cmd->add_option("--alpha", alphas, "exponents")->delimiter(',')->required();
  sweep_cmd->add_option("--ngrid", ngrid, "vertex counts n1,n2,...")
      ->delimiter(',')
      ->required();

  // critical-dim
  auto* crit_cmd = app.add_subcommand("critical-dim", "tau profile and k*");
  crit_cmd->add_option("--alpha", alphas, "exponents")->delimiter(',')->required();
  crit_cmd->add_option("--kmax", kmax, "maximum tracked dimension")->required();

  // betti
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of a complex file");
  std::string in_path;
  int field_char = 2;
  betti_cmd->add_option("--in", in_path, "complex file")->required();
  betti_cmd->add_option("--field", field_char, "field characteristic (prime)")
      ->capture_default_str();

  // free
  auto* free_cmd = app.add_subcommand("free", "count free simplices");
  int free_dim = 0;
  free_cmd->add_option("--in", in_path, "complex file")->required();
  free_cmd->add_option("--dim", free_dim, "dimension")->required();

  // tail-mc
  auto* tail_cmd = app.add_subcommand("tail-mc", "Monte Carlo upper-tail estimate");
  std::string config_path;
  tail_cmd->add_option("--config", config_path, "JSON config file")->required();

  // exponent-report
  auto* report_cmd =
      app.add_subcommand("exponent-report", "predicted large-deviation windows");
  double epsilon = 0.5;
  bool betti_mode = false;
  report_cmd->add_option("--pattern", pattern_path, "pattern complex file")->required();
  report_cmd->add_option("--alpha", alphas, "exponents")->delimiter(',')->required();
  report_cmd->add_option("--ngrid", ngrid, "vertex counts")->delimiter(',')->required();
  report_cmd->add_option("--epsilon", epsilon, "tail threshold factor")
      ->capture_default_str();
  report_cmd->add_flag("--betti", betti_mode, "Betti-number window at k*");

  CLI11_PARSE(app, argc, argv);

  if (sample_cmd->parsed()) {
    OwnedModel model;
    make_model(n, probs, alphas, kmax, model);
    OwnedComplex K;
    check(scld_sample(model.handle, seed, &K.handle));
    OwnedString text;
    check(scld_complex_to_json(K.handle, &text.text));
    write_output(text.str() + "\n", out_path);
    return 0;
  }

  if (count_cmd->parsed()) {
    OwnedComplex host, pattern;
    load_complex(host_path, host);
    load_complex(pattern_path, pattern);
    uint64_t n_ordered = 0, n_unordered = 0, aut = 0;
    check(scld_count_ordered(host.handle, pattern.handle, &n_ordered));
    check(scld_count_unordered(host.handle, pattern.handle, &n_unordered));
    check(scld_automorphism_count(pattern.handle, &aut));
    std::ostringstream os;
    os << "{\"count\":" << (ordered ? n_ordered : n_unordered)
       << ",\"ordered\":" << n_ordered << ",\"unordered\":" << n_unordered
       << ",\"aut\":" << aut << "}\n";
    write_output(os.str(), out_path);
    return 0;
  }

  if (mean_cmd->parsed()) {
    OwnedModel model;
    make_model(n, probs, alphas, kmax, model);
    OwnedComplex pattern;
    load_complex(pattern_path, pattern);
    OwnedString text;
    check(scld_mean_json(model.handle, pattern.handle, &text.text));
    write_output(text.str() + "\n", out_path);
    return 0;
  }

  if (gamma_cmd->parsed()) {
    OwnedComplex pattern;
    load_complex(pattern_path, pattern);
    OwnedString text;
    if (exponent_base > 0) {
      auto ptrs = c_strings(bounds_text);
      check(scld_gamma_exponent_json(pattern.handle, exponent_base, ptrs.data(),
                                     static_cast<int32_t>(ptrs.size()), &text.text));
    } else {
      std::vector<double> bounds;
      for (const auto& s : bounds_text) bounds.push_back(std::stod(s));
      check(scld_gamma_json(pattern.handle, bounds.data(),
                            static_cast<int32_t>(bounds.size()), &text.text));
    }
    write_output(text.str() + "\n", out_path);
    return 0;
  }

  if (oracle_cmd->parsed()) {
    OwnedComplex pattern;
    load_complex(pattern_path, pattern);
    std::vector<std::int64_t> bounds;
    for (const auto& s : bounds_text) bounds.push_back(std::stoll(s));
    std::int64_t value = 0;
    check(scld_oracle_n(pattern.handle, bounds.data(),
                        static_cast<int32_t>(bounds.size()), &value));
    // attach the LP view of the same query
    std::vector<double> fb(bounds.begin(), bounds.end());
    OwnedString lp;
    scld_status lp_status = scld_gamma_json(pattern.handle, fb.data(),
                                            static_cast<int32_t>(fb.size()), &lp.text);
    std::ostringstream os;
    os << "{\"N\":" << value;
    if (lp_status == SCLD_OK) os << ",\"lp\":" << lp.str();
    os << "}\n";
    write_output(os.str(), out_path);
    return 0;
  }

  if (mstar_cmd->parsed()) {
    OwnedModel model;
    make_model(n, probs, alphas, kmax, model);
    OwnedComplex pattern;
    load_complex(pattern_path, pattern);
    OwnedString text;
    check(scld_mstar_json(model.handle, pattern.handle, oracle_mode ? 1 : 0, threads,
                          &text.text));
    write_output(text.str() + "\n", out_path);
    return 0;
  }

  if (sweep_cmd->parsed()) {
    OwnedComplex pattern;
    load_complex(pattern_path, pattern);
    auto ptrs = c_strings(alphas);
    OwnedString text;
    check(scld_sweep_csv(pattern.handle, ptrs.data(),
                         static_cast<int32_t>(ptrs.size()), ngrid.data(),
                         static_cast<int32_t>(ngrid.size()), threads, &text.text));
    write_output(text.str(), out_path);
    return 0;
  }

  if (crit_cmd->parsed()) {
    auto ptrs = c_strings(alphas);
    OwnedString text;
    check(scld_critical_profile_json(ptrs.data(), static_cast<int32_t>(ptrs.size()),
                                     kmax, &text.text));
    write_output(text.str() + "\n", out_path);
    return 0;
  }

  if (betti_cmd->parsed()) {
    OwnedComplex K;
    load_complex(in_path, K);
    int32_t dim = scld_complex_dimension(K.handle);
    std::vector<int64_t> betti(dim + 2, 0), counts(dim + 2, 0);
    int32_t nb = 0, nc = 0;
    check(scld_betti(K.handle, field_char, betti.data(),
                     static_cast<int32_t>(betti.size()), &nb));
    check(scld_complex_counts(K.handle, counts.data(),
                              static_cast<int32_t>(counts.size()), &nc));
    std::int64_t euler = 0;
    int sign = 1;
    for (int32_t i = 0; i < nc; ++i, sign = -sign) euler += sign * counts[i];
    std::ostringstream os;
    os << "{\"field\":" << field_char << ",\"betti\":[";
    for (int32_t i = 0; i < nb; ++i) os << (i ? "," : "") << betti[i];
    os << "],\"euler\":" << euler << "}\n";
    write_output(os.str(), out_path);
    return 0;
  }

  if (free_cmd->parsed()) {
    OwnedComplex K;
    load_complex(in_path, K);
    std::int64_t value = 0;
    check(scld_free_count(K.handle, free_dim, &value));
    std::ostringstream os;
    os << "{\"dim\":" << free_dim << ",\"free\":" << value << "}\n";
    write_output(os.str(), out_path);
    return 0;
  }

  if (tail_cmd->parsed()) {
    std::string config = read_file(config_path);
    OwnedString csv, summary;
    check(scld_tail_mc(config.c_str(), threads, &csv.text, &summary.text));
    if (!out_path.empty()) {
      write_output(csv.str(), out_path);
      std::cout << summary.str() << "\n";
    } else if (format == "csv") {
      std::cout << csv.str();
      std::cerr << summary.str() << "\n";
    } else {
      std::cout << summary.str() << "\n";
    }
    return 0;
  }

  if (report_cmd->parsed()) {
    OwnedComplex pattern;
    load_complex(pattern_path, pattern);
    auto ptrs = c_strings(alphas);
    OwnedString text;
    check(scld_exponent_report(pattern.handle, ptrs.data(),
                               static_cast<int32_t>(ptrs.size()), ngrid.data(),
                               static_cast<int32_t>(ngrid.size()), epsilon,
                               betti_mode ? 1 : 0, threads,
                               format == "csv" ? 1 : 0, &text.text));
    write_output(text.str() + (format == "csv" ? "" : "\n"), out_path);
    return 0;
  }

  return 0;
}
