// Command-line front end. Talks to the library exclusively through the
// C interface in fgindex.h; all formatting and flag plumbing lives here.
// Data goes to stdout (or --output); diagnostics go to stderr.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fgindex.h"
#include "json.hpp"

using nlohmann::json;

namespace {

std::string take(char* s)
{
  std::string out = s == nullptr ? std::string() : s;
  fgi_string_free(s);
  return out;
}

int report_error(fgi_status s)
{
  std::cerr << "error (" << fgi_status_name(s) << "): " << fgi_last_error()
            << "\n";
  return static_cast<int>(s);
}

// "A..B" or a single "A".
bool parse_range(const std::string& text, long& lo, long& hi)
{
  std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stol(text);
    } else {
      lo = std::stol(text.substr(0, dots));
      hi = std::stol(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

struct output_target {
  std::ofstream file;
  std::ostream* os = &std::cout;

  bool open(const std::string& path)
  {
    if (path.empty()) return true;
    file.open(path, std::ios::binary);
    if (!file.is_open()) {
      std::cerr << "error: cannot open output file " << path << "\n";
      return false;
    }
    os = &file;
    return true;
  }
};

struct parsed_word {
  fgi_word* w = nullptr;
  ~parsed_word() { fgi_word_free(w); }
};

int run_index(const std::string& word_text, int rank, const std::string& kind,
              int cap, int guard, int workers, const std::string& format,
              const std::string& output, const std::string& certificate_path)
{
  parsed_word w;
  fgi_status s = fgi_word_parse(word_text.c_str(), rank, &w.w);
  if (s != FGI_OK) return report_error(s);

  output_target out;
  if (!out.open(output)) return 70;

  fgi_index_options opts{cap, guard, workers};
  int value = 0;
  char* doc_raw = nullptr;
  int k = kind == "prim" ? FGI_KIND_PRIMITIVITY : FGI_KIND_SIMPLICITY;
  s = fgi_index(w.w, k, &opts, &value, &doc_raw);
  std::string doc = take(doc_raw);

  if (s == FGI_OK) {
    if (format == "json")
      *out.os << doc << "\n";
    else
      *out.os << value << "\n";
    if (!certificate_path.empty()) {
      std::ofstream cert(certificate_path, std::ios::binary);
      if (!cert.is_open()) {
        std::cerr << "error: cannot open certificate file " << certificate_path
                  << "\n";
        return 70;
      }
      cert << doc << "\n";
    }
    return 0;
  }
  if (!doc.empty() && format == "json") *out.os << doc << "\n";
  return report_error(s);
}

int run_verify(const CLI::App* cmd, const std::string& selector,
               const std::string& n_range, const std::string& i_range,
               const std::string& d_range, const std::string& degree_range,
               long t, int dp, int degree_guard, long m_max, int i_max,
               long lcm_cap, const std::string& format,
               const std::string& output)
{
  json params = json::object();
  long lo = 0, hi = 0;
  if (cmd->count("--n") > 0) {
    if (!parse_range(n_range, lo, hi)) {
      std::cerr << "error: bad range " << n_range << "\n";
      return 64;
    }
    if (selector == "prop4") {
      params["n"] = lo;
    } else {
      params["n_from"] = lo;
      params["n_to"] = hi;
    }
  }
  if (cmd->count("--i") > 0) {
    if (!parse_range(i_range, lo, hi)) {
      std::cerr << "error: bad range " << i_range << "\n";
      return 64;
    }
    params["i_from"] = lo;
    params["i_to"] = hi;
  }
  if (cmd->count("--d") > 0) {
    if (!parse_range(d_range, lo, hi)) {
      std::cerr << "error: bad range " << d_range << "\n";
      return 64;
    }
    if (selector == "prop4") {
      params["d"] = lo;
    } else {
      params["d_from"] = lo;
      params["d_to"] = hi;
    }
  }
  if (cmd->count("--degree") > 0) {
    if (!parse_range(degree_range, lo, hi)) {
      std::cerr << "error: bad range " << degree_range << "\n";
      return 64;
    }
    params["degree_from"] = lo;
    params["degree_to"] = hi;
  }
  if (cmd->count("--t") > 0) params["t"] = t;
  if (cmd->count("--dp") > 0) params["dp"] = dp;
  if (cmd->count("--degree-guard") > 0) params["degree_guard"] = degree_guard;
  if (cmd->count("--m-max") > 0) params["m_max"] = m_max;
  if (cmd->count("--i-max") > 0) params["i_max"] = i_max;
  if (cmd->count("--lcm-cap") > 0) params["lcm_cap"] = lcm_cap;

  char* report_raw = nullptr;
  fgi_status s =
      fgi_verify(selector.c_str(), params.dump().c_str(), &report_raw);
  std::string report = take(report_raw);
  if (report.empty()) return report_error(s);

  output_target out;
  if (!out.open(output)) return 70;

  if (format == "json") {
    *out.os << report << "\n";
  } else {
    json doc = json::parse(report);
    for (const auto& c : doc["cases"]) {
      const char* tag = c["pass"].get<bool>()
                            ? (c["discrepancy"].get<bool>() ? "DISC" : "PASS")
                            : "FAIL";
      *out.os << tag << "  " << std::left << std::setw(24)
              << c["name"].get<std::string>() << "  "
              << c["detail"].get<std::string>() << "\n";
    }
    *out.os << "passed " << doc["passed"] << "  failed " << doc["failed"]
            << "  discrepancies " << doc["discrepancies"] << "\n";
  }
  if (s != FGI_OK) {
    std::cerr << "verify " << selector << ": " << fgi_status_name(s) << ": "
              << fgi_last_error() << "\n";
    return static_cast<int>(s);
  }
  return 0;
}

struct cover_sink {
  std::ostream* os = nullptr;  // null: count only
};

int emit_cover(const char* cover_json, void* user)
{
  auto* sink = static_cast<cover_sink*>(user);
  if (sink->os != nullptr)
    *sink->os << json::parse(cover_json).dump() << "\n";
  return 0;
}

int run_enumerate(int rank, int degree, const std::string& contains,
                  int guard, const std::string& format,
                  const std::string& output)
{
  if (degree > guard) {
    std::cerr << "error (infeasible): degree " << degree
              << " exceeds the guard " << guard << " (raise --guard)\n";
    return 3;
  }
  parsed_word filter;
  if (!contains.empty()) {
    fgi_status s = fgi_word_parse(contains.c_str(), rank, &filter.w);
    if (s != FGI_OK) return report_error(s);
  }

  output_target out;
  if (!out.open(output)) return 70;

  cover_sink sink;
  if (format == "jsonl") sink.os = out.os;
  long count = 0;
  fgi_status s = fgi_enumerate(rank, degree, filter.w, emit_cover, &sink,
                               &count);
  if (s != FGI_OK) return report_error(s);
  if (format == "jsonl")
    std::cerr << "count " << count << "\n";
  else
    *out.os << count << "\n";
  return 0;
}

int run_construct(const CLI::App* cmd, const std::string& kind, int d, long n,
                  long t, int dp, const std::string& sigma_a,
                  const std::string& sigma_b, const std::string& format,
                  const std::string& output)
{
  json params = {{"kind", kind}};
  if (cmd->count("--d") > 0) params["d"] = d;
  if (cmd->count("--n") > 0) params["n"] = n;
  if (cmd->count("--t") > 0) params["t"] = t;
  if (cmd->count("--dp") > 0) params["dp"] = dp;
  auto parse_sigma = [](const std::string& text) {
    json arr = json::array();
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) arr.push_back(std::stol(item));
    return arr;
  };
  try {
    if (cmd->count("--sigma-a") > 0) params["sigma_a"] = parse_sigma(sigma_a);
    if (cmd->count("--sigma-b") > 0) params["sigma_b"] = parse_sigma(sigma_b);
  } catch (const std::exception&) {
    std::cerr << "error: sigma values must be comma-separated integers\n";
    return 64;
  }

  output_target out;
  if (!out.open(output)) return 70;

  char* raw = nullptr;
  fgi_status s = format == "dot"
                     ? fgi_construct_dot(params.dump().c_str(), &raw)
                     : fgi_construct(params.dump().c_str(), &raw);
  std::string text = take(raw);
  if (s != FGI_OK) return report_error(s);
  *out.os << text;
  if (format != "dot") *out.os << "\n";
  return 0;
}

int run_bounds(long m_max, int i_max, const std::string& table,
               const std::string& psi_out, const std::string& lcm_out,
               const std::string& output)
{
  bool want_psi = table == "psi" || !psi_out.empty();
  bool want_lcm = table == "lcm" || !lcm_out.empty();
  char* psi_raw = nullptr;
  char* lcm_raw = nullptr;
  fgi_status s = fgi_bounds_csv(m_max, i_max, want_psi ? &psi_raw : nullptr,
                                want_lcm ? &lcm_raw : nullptr);
  std::string psi = take(psi_raw);
  std::string lcm = take(lcm_raw);
  if (s != FGI_OK) return report_error(s);

  auto write_file = [](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f.is_open()) {
      std::cerr << "error: cannot open output file " << path << "\n";
      return false;
    }
    f << text;
    return true;
  };
  if (!psi_out.empty() && !write_file(psi_out, psi)) return 70;
  if (!lcm_out.empty() && !write_file(lcm_out, lcm)) return 70;

  output_target out;
  if (!out.open(output)) return 70;
  *out.os << (table == "psi" ? psi : lcm);
  return 0;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"primitivity and simplicity indices of words in free groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fgi_version());
  int rc = 0;

  auto* index = app.add_subcommand(
      "index", "least index of a subgroup containing the word as a "
               "primitive or simple element");
  std::string word_text, kind = "prim", format = "text", output;
  std::string certificate_path;
  int rank = 2, cap = 0, guard = 0, workers = 0;
  index->add_option("--word", word_text, "word text, e.g. \"a^3 b^3\"")
      ->required();
  index->add_option("--rank", rank, "ambient free group rank (default 2)");
  index->add_option("--kind", kind, "prim or simp (default prim)")
      ->check(CLI::IsMember({"prim", "simp"}));
  index->add_option("--cap", cap, "degree cap (0: cyclic length - 1)");
  index->add_option("--degree-guard", guard,
                    "refuse degrees above this bound (0: 7)");
  index->add_option("-j,--workers", workers,
                    "parallel cover workers (0: FGINDEX_WORKERS, else 1)");
  index->add_option("--format", format, "text or json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  index->add_option("-o,--output", output, "write data to a file");
  index->add_option("--certificate", certificate_path,
                    "also write the certificate document to a file");
  index->callback([&] {
    rc = run_index(word_text, rank, kind, cap, guard, workers, format, output,
                   certificate_path);
  });

  auto* verify = app.add_subcommand(
      "verify", "run a verification driver over a parameter range");
  std::string selector, n_range, i_range, d_range, degree_range;
  std::string v_format = "text", v_output;
  long v_t = 0, v_m_max = 0;
  int v_dp = 0, v_guard = 0, v_i_max = 0;
  long v_lcm_cap = 0;
  verify
      ->add_option("selector", selector,
                   "thm1 | thm2 | thm4 | prop4 | lemma1 | power | bounds")
      ->required();
  verify->add_option("--n", n_range, "n range, e.g. 2..8 (prop4: single n)");
  verify->add_option("--i", i_range, "i range (thm2)");
  verify->add_option("--d", d_range, "d range (lemma1; prop4: single d)");
  verify->add_option("--degree", degree_range, "degree range (power)");
  verify->add_option("--t", v_t, "t (prop4)");
  verify->add_option("--dp", v_dp, "d' (prop4)");
  verify->add_option("--degree-guard", v_guard, "exhaustion guard (thm2)");
  verify->add_option("--m-max", v_m_max, "psi table bound (bounds)");
  verify->add_option("--i-max", v_i_max, "lcm sequence length (bounds)");
  verify->add_option("--lcm-cap", v_lcm_cap, "exact-lcm check bound (bounds)");
  verify->add_option("--format", v_format, "text or json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("-o,--output", v_output, "write data to a file");
  verify->callback([&] {
    rc = run_verify(verify, selector, n_range, i_range, d_range, degree_range,
                    v_t, v_dp, v_guard, v_m_max, v_i_max, v_lcm_cap, v_format,
                    v_output);
  });

  auto* enumerate = app.add_subcommand(
      "enumerate", "stream canonical covers of the rank-r rose");
  int e_rank = 2, e_degree = 1, e_guard = 7;
  std::string e_contains, e_format = "text", e_output;
  enumerate->add_option("--rank", e_rank, "rose rank (default 2)");
  enumerate->add_option("--degree", e_degree, "covering degree")->required();
  enumerate->add_option("--contains", e_contains,
                        "only covers whose subgroup contains this word");
  enumerate->add_option("--guard", e_guard,
                        "refuse degrees above this bound (default 7)");
  enumerate
      ->add_option("--format", e_format,
                   "text (count only) or jsonl (default text)")
      ->check(CLI::IsMember({"text", "jsonl"}));
  enumerate->add_option("-o,--output", e_output, "write data to a file");
  enumerate->callback([&] {
    rc = run_enumerate(e_rank, e_degree, e_contains, e_guard, e_format,
                       e_output);
  });

  auto* construct = app.add_subcommand(
      "construct", "build a witness subgroup basis for inspection");
  std::string c_kind, c_sigma_a, c_sigma_b, c_format = "json", c_output;
  int c_d = 0, c_dp = 0;
  long c_n = 0, c_t = 0;
  construct->add_option("kind", c_kind, "lemma1 | prop4 | power")->required();
  construct->add_option("--d", c_d, "cycle length (lemma1, prop4)");
  construct->add_option("--n", c_n, "a-exponent (prop4)");
  construct->add_option("--t", c_t, "b-exponent (prop4)");
  construct->add_option("--dp", c_dp, "second cycle length (prop4)");
  construct->add_option("--sigma-a", c_sigma_a,
                        "a-permutation, comma-separated images (power)");
  construct->add_option("--sigma-b", c_sigma_b,
                        "b-permutation, comma-separated images (power)");
  construct->add_option("--format", c_format, "json or dot (default json)")
      ->check(CLI::IsMember({"json", "dot"}));
  construct->add_option("-o,--output", c_output, "write data to a file");
  construct->callback([&] {
    rc = run_construct(construct, c_kind, c_d, c_n, c_t, c_dp, c_sigma_a,
                       c_sigma_b, c_format, c_output);
  });

  auto* bounds = app.add_subcommand(
      "bounds", "number-theoretic tables behind the growth bounds");
  long b_m_max = 1000;
  int b_i_max = 30;
  std::string b_table = "lcm", b_psi_out, b_lcm_out, b_output;
  bounds->add_option("--m-max", b_m_max, "psi table bound (default 1000)");
  bounds->add_option("--i-max", b_i_max,
                     "lcm sequence length (default 30)");
  bounds->add_option("--table", b_table, "lcm or psi (default lcm)")
      ->check(CLI::IsMember({"lcm", "psi"}));
  bounds->add_option("--psi-out", b_psi_out, "write the psi table here");
  bounds->add_option("--lcm-out", b_lcm_out, "write the lcm table here");
  bounds->add_option("-o,--output", b_output, "write data to a file");
  bounds->callback([&] {
    rc = run_bounds(b_m_max, b_i_max, b_table, b_psi_out, b_lcm_out, b_output);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }
  return rc;
}
