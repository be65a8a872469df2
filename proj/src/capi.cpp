#include "fgindex.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "fgindex/constructions.hpp"
#include "fgindex/index.hpp"
#include "fgindex/json_io.hpp"
#include "fgindex/numtheory.hpp"
#include "fgindex/stallings.hpp"
#include "fgindex/whitehead.hpp"
#include "fgindex/word.hpp"

#define FGI_API __attribute__((visibility("default")))

struct fgi_word {
  fgx::Word w;
};

namespace {

using fgx::jsonio::json;

thread_local std::string g_error;

char* dup_string(const std::string& s)
{
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fgi_status fail(fgi_status s, const std::string& msg)
{
  g_error = msg;
  return s;
}

// Exceptions map to statuses: document errors to PARSE, violated
// preconditions to USAGE, anything else to INTERNAL.
template <typename F>
fgi_status guarded(F&& body)
{
  g_error.clear();
  try {
    return body();
  } catch (const json::exception& e) {
    return fail(FGI_PARSE_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FGI_USAGE_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(FGI_INTERNAL_ERROR, e.what());
  }
}

fgi_status write_out(char** out, const std::string& s)
{
  *out = dup_string(s);
  if (*out == nullptr) return fail(FGI_INTERNAL_ERROR, "allocation failed");
  return FGI_OK;
}

std::string dump(const json& j) { return j.dump(2); }

// Shared backend of fgi_construct and fgi_construct_dot.
fgi_status construct_impl(const char* params_json, json* doc_out,
                          std::string* dot_out)
{
  if (params_json == nullptr)
    return fail(FGI_USAGE_ERROR, "params_json is null");
  json params = json::parse(params_json);
  std::string kind = params.at("kind").get<std::string>();
  if (kind == "lemma1") {
    int d = params.at("d").get<int>();
    fgx::SubgroupBasis basis = fgx::lemma_one_basis(d);
    if (doc_out != nullptr) *doc_out = fgx::jsonio::lemma_basis_to_json(basis, d);
    if (dot_out != nullptr) *dot_out = fgx::to_dot(basis.graph);
    return FGI_OK;
  }
  if (kind == "prop4") {
    fgx::GluedCyclesCertificate cert = fgx::glued_cycles_cover(
        params.at("n").get<long>(), params.at("t").get<long>(),
        params.at("d").get<int>(), params.at("dp").get<int>());
    if (doc_out != nullptr) *doc_out = fgx::jsonio::glued_certificate_to_json(cert);
    if (dot_out != nullptr) *dot_out = fgx::to_dot(cert.cover);
    return FGI_OK;
  }
  if (kind == "power") {
    fgx::CoverPermutations cover;
    cover.rank = 2;
    cover.perm = {params.at("sigma_a").get<std::vector<std::int32_t>>(),
                  params.at("sigma_b").get<std::vector<std::int32_t>>()};
    cover.degree = static_cast<std::int32_t>(cover.perm[0].size());
    if (cover.degree < 1 || cover.perm[1].size() != cover.perm[0].size())
      return fail(FGI_USAGE_ERROR,
                  "sigma_a and sigma_b must be nonempty and equally long");
    for (const auto& p : cover.perm) {
      std::vector<bool> seen(p.size(), false);
      for (std::int32_t v : p) {
        if (v < 0 || v >= cover.degree || seen[v])
          return fail(FGI_USAGE_ERROR, "sigma entries must be permutations");
        seen[v] = true;
      }
    }
    if (!fgx::cover_to_graph(cover).connected())
      return fail(FGI_USAGE_ERROR, "cover must be connected");
    fgx::PowerBasis basis = fgx::power_basis(cover);
    if (doc_out != nullptr) *doc_out = fgx::jsonio::power_basis_to_json(basis);
    if (dot_out != nullptr) *dot_out = fgx::to_dot(basis.basis.graph);
    return FGI_OK;
  }
  return fail(FGI_USAGE_ERROR, "kind must be lemma1, prop4, or power");
}

}  // namespace

extern "C" FGI_API const char* fgi_version(void) { return "1.0.0"; }

extern "C" FGI_API const char* fgi_status_name(fgi_status s)
{
  switch (s) {
    case FGI_OK: return "ok";
    case FGI_VERIFY_FAILED: return "verify-failed";
    case FGI_CAP_EXHAUSTED: return "cap-exhausted";
    case FGI_INFEASIBLE: return "infeasible";
    case FGI_DISCREPANCY: return "discrepancy";
    case FGI_PARSE_ERROR: return "parse-error";
    case FGI_USAGE_ERROR: return "usage-error";
    case FGI_INTERNAL_ERROR: return "internal-error";
  }
  return "unknown";
}

extern "C" FGI_API const char* fgi_last_error(void) { return g_error.c_str(); }

extern "C" FGI_API void fgi_string_free(char* s) { std::free(s); }

extern "C" FGI_API fgi_status fgi_word_parse(const char* text, int rank,
                                             fgi_word** out)
{
  g_error.clear();
  if (text == nullptr || out == nullptr)
    return fail(FGI_USAGE_ERROR, "text and out must be non-null");
  *out = nullptr;
  try {
    *out = new fgi_word{fgx::parse_word(text, rank)};
    return FGI_OK;
  } catch (const std::invalid_argument& e) {
    return fail(FGI_PARSE_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(FGI_INTERNAL_ERROR, e.what());
  }
}

extern "C" FGI_API void fgi_word_free(fgi_word* w) { delete w; }

extern "C" FGI_API fgi_status fgi_word_print(const fgi_word* w, char** out)
{
  return guarded([&]() -> fgi_status {
    if (w == nullptr || out == nullptr)
      return fail(FGI_USAGE_ERROR, "word and out must be non-null");
    return write_out(out, fgx::print_word(w->w));
  });
}

extern "C" FGI_API int fgi_word_rank(const fgi_word* w)
{
  return w == nullptr ? 0 : w->w.rank();
}

extern "C" FGI_API long fgi_word_length(const fgi_word* w)
{
  return w == nullptr ? 0 : static_cast<long>(w->w.letters().size());
}

extern "C" FGI_API long fgi_word_cyclic_length(const fgi_word* w)
{
  if (w == nullptr) return 0;
  return static_cast<long>(
      fgx::cyclic_reduce(w->w).cyclic.rep().letters().size());
}

extern "C" FGI_API fgi_status fgi_word_is_primitive(const fgi_word* w,
                                                    int* out)
{
  return guarded([&]() -> fgi_status {
    if (w == nullptr || out == nullptr)
      return fail(FGI_USAGE_ERROR, "word and out must be non-null");
    *out = fgx::is_primitive(w->w) ? 1 : 0;
    return FGI_OK;
  });
}

extern "C" FGI_API fgi_status fgi_word_is_simple(const fgi_word* w, int* out)
{
  return guarded([&]() -> fgi_status {
    if (w == nullptr || out == nullptr)
      return fail(FGI_USAGE_ERROR, "word and out must be non-null");
    *out = fgx::is_simple(w->w) ? 1 : 0;
    return FGI_OK;
  });
}

extern "C" FGI_API fgi_status fgi_whitehead_graph_dot(const fgi_word* w,
                                                      char** dot_out)
{
  return guarded([&]() -> fgi_status {
    if (w == nullptr || dot_out == nullptr)
      return fail(FGI_USAGE_ERROR, "word and out must be non-null");
    fgx::WhiteheadGraph g =
        fgx::whitehead_graph(fgx::cyclic_reduce(w->w).cyclic);
    return write_out(dot_out, fgx::to_dot(g));
  });
}

extern "C" FGI_API fgi_status fgi_index(const fgi_word* w, int kind,
                                        const fgi_index_options* opts,
                                        int* index_out,
                                        char** certificate_json_out)
{
  return guarded([&]() -> fgi_status {
    if (w == nullptr || index_out == nullptr)
      return fail(FGI_USAGE_ERROR, "word and index_out must be non-null");
    if (kind != FGI_KIND_PRIMITIVITY && kind != FGI_KIND_SIMPLICITY)
      return fail(FGI_USAGE_ERROR, "kind must be 0 or 1");
    if (certificate_json_out != nullptr) *certificate_json_out = nullptr;

    fgx::IndexOptions io;
    if (opts != nullptr) {
      io.cap = opts->cap;
      io.degree_guard = opts->degree_guard == 0 ? 7 : opts->degree_guard;
      io.workers = opts->workers;
    }
    fgx::IndexResult r = kind == FGI_KIND_PRIMITIVITY
                             ? fgx::primitivity_index(w->w, io)
                             : fgx::simplicity_index(w->w, io);

    if (r.status == fgx::IndexResult::Status::Computed) {
      *index_out = r.value;
      if (certificate_json_out != nullptr) {
        fgi_status s = write_out(certificate_json_out,
                                 dump(fgx::jsonio::certificate_to_json(
                                     *r.certificate)));
        if (s != FGI_OK) return s;
      }
      return FGI_OK;
    }

    *index_out = r.stopped_at;
    if (certificate_json_out != nullptr) {
      json exhaustion = json::array();
      for (const fgx::DegreeExhaustion& d : r.exhaustion)
        exhaustion.push_back({{"degree", d.degree},
                              {"enumerated", d.enumerated},
                              {"containing", d.containing},
                              {"rejected", d.rejected}});
      bool capped = r.status == fgx::IndexResult::Status::CapExhausted;
      json doc = {{"status", capped ? "cap-exhausted" : "guard-refused"},
                  {"stopped_at", r.stopped_at},
                  {"exhaustion", exhaustion}};
      fgi_status s = write_out(certificate_json_out, dump(doc));
      if (s != FGI_OK) return s;
    }
    if (r.status == fgx::IndexResult::Status::CapExhausted)
      return fail(FGI_CAP_EXHAUSTED,
                  "no subgroup found up to the degree cap " +
                      std::to_string(r.stopped_at));
    return fail(FGI_INFEASIBLE, "degree guard refused searching beyond " +
                                    std::to_string(r.stopped_at));
  });
}

extern "C" FGI_API fgi_status fgi_verify(const char* selector,
                                         const char* params_json,
                                         char** report_json_out)
{
  return guarded([&]() -> fgi_status {
    if (selector == nullptr)
      return fail(FGI_USAGE_ERROR, "selector is null");
    if (report_json_out != nullptr) *report_json_out = nullptr;

    json p = json::object();
    if (params_json != nullptr && params_json[0] != '\0')
      p = json::parse(params_json);

    std::string sel = selector;
    fgx::VerifyReport report;
    if (sel == "thm1") {
      report = fgx::verify_upper_bound(p.value("n_from", 2L),
                                       p.value("n_to", 200L));
    } else if (sel == "thm2") {
      report = fgx::verify_lower_bound(p.value("i_from", 3),
                                       p.value("i_to", 4),
                                       p.value("degree_guard", 4));
    } else if (sel == "thm4") {
      report = fgx::verify_simplicity_two(p.value("n_from", 2L),
                                          p.value("n_to", 8L));
    } else if (sel == "prop4") {
      report = fgx::verify_glued(p.value("n", 3L), p.value("t", 3L),
                                 p.value("d", 2), p.value("dp", 2));
    } else if (sel == "lemma1") {
      report = fgx::verify_lemma_one(p.value("d_from", 2),
                                     p.value("d_to", 20));
    } else if (sel == "power") {
      report = fgx::verify_power_bases(p.value("degree_from", 1),
                                       p.value("degree_to", 3));
    } else if (sel == "bounds") {
      report = fgx::verify_bounds(p.value("m_max", 100000UL),
                                  p.value("i_max", 30),
                                  p.value("lcm_cap", 10000UL));
    } else {
      return fail(FGI_USAGE_ERROR, "unknown selector " + sel);
    }

    if (report_json_out != nullptr) {
      fgi_status s = write_out(report_json_out,
                               dump(fgx::jsonio::report_to_json(report)));
      if (s != FGI_OK) return s;
    }
    if (report.failed > 0)
      return fail(FGI_VERIFY_FAILED, std::to_string(report.failed) + " of " +
                                         std::to_string(report.cases.size()) +
                                         " cases failed");
    if (report.discrepancies > 0)
      return fail(FGI_DISCREPANCY,
                  std::to_string(report.discrepancies) +
                      " case(s) contradict recorded values");
    return FGI_OK;
  });
}

extern "C" FGI_API fgi_status fgi_enumerate(int rank, int degree,
                                            const fgi_word* contains_or_null,
                                            fgi_cover_callback cb, void* user,
                                            long* count_out)
{
  return guarded([&]() -> fgi_status {
    if (cb == nullptr) return fail(FGI_USAGE_ERROR, "callback is null");
    if (rank < 1 || rank > 127)
      return fail(FGI_USAGE_ERROR, "rank must be in [1, 127]");
    if (degree < 1) return fail(FGI_USAGE_ERROR, "degree must be >= 1");
    if (contains_or_null != nullptr && contains_or_null->w.rank() != rank)
      return fail(FGI_USAGE_ERROR, "filter word rank differs from rank");

    long count = 0;
    fgx::enumerate_covers(
        rank, degree, [&](const fgx::CoverPermutations& c) -> bool {
          if (contains_or_null != nullptr && !c.contains(contains_or_null->w))
            return true;
          json doc = fgx::jsonio::cover_to_json(c);
          doc["schema"] = "fgindex.cover/1";
          std::string text = dump(doc);
          ++count;
          return cb(text.c_str(), user) == 0;
        });
    if (count_out != nullptr) *count_out = count;
    return FGI_OK;
  });
}

extern "C" FGI_API fgi_status fgi_construct(const char* params_json,
                                            char** artifact_json_out)
{
  return guarded([&]() -> fgi_status {
    if (artifact_json_out == nullptr)
      return fail(FGI_USAGE_ERROR, "artifact_json_out is null");
    *artifact_json_out = nullptr;
    json doc;
    fgi_status s = construct_impl(params_json, &doc, nullptr);
    if (s != FGI_OK) return s;
    return write_out(artifact_json_out, dump(doc));
  });
}

extern "C" FGI_API fgi_status fgi_construct_dot(const char* params_json,
                                                char** dot_out)
{
  return guarded([&]() -> fgi_status {
    if (dot_out == nullptr) return fail(FGI_USAGE_ERROR, "dot_out is null");
    *dot_out = nullptr;
    std::string dot;
    fgi_status s = construct_impl(params_json, nullptr, &dot);
    if (s != FGI_OK) return s;
    return write_out(dot_out, dot);
  });
}

extern "C" FGI_API fgi_status fgi_bounds_csv(long m_max, int i_max,
                                             char** psi_csv_out,
                                             char** lcm_csv_out)
{
  return guarded([&]() -> fgi_status {
    if (m_max < 1) return fail(FGI_USAGE_ERROR, "m_max must be >= 1");
    if (psi_csv_out != nullptr) {
      fgx::ChebyshevTable t =
          fgx::chebyshev_table(static_cast<unsigned long>(m_max), 0);
      fgi_status s = write_out(psi_csv_out, fgx::psi_csv(t));
      if (s != FGI_OK) return s;
    }
    if (lcm_csv_out != nullptr) {
      if (i_max < 2) return fail(FGI_USAGE_ERROR, "i_max must be >= 2");
      fgx::BoundsScan scan =
          fgx::lemma2_bounds_check(static_cast<unsigned long>(m_max), i_max);
      fgi_status s = write_out(lcm_csv_out, fgx::lcm_csv(scan));
      if (s != FGI_OK) return s;
    }
    return FGI_OK;
  });
}
