#include "fgindex.h"

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct owned_string {
  char* p = nullptr;
  ~owned_string() { fgi_string_free(p); }
  std::string str() const { return p == nullptr ? std::string() : p; }
};

struct owned_word {
  fgi_word* w = nullptr;
  ~owned_word() { fgi_word_free(w); }
};

fgi_word* must_parse(const std::string& text, int rank)
{
  fgi_word* w = nullptr;
  REQUIRE(fgi_word_parse(text.c_str(), rank, &w) == FGI_OK);
  REQUIRE(w != nullptr);
  return w;
}

int collect_cover(const char* cover_json, void* user)
{
  static_cast<std::vector<json>*>(user)->push_back(json::parse(cover_json));
  return 0;
}

int stop_after_first(const char* cover_json, void* user)
{
  static_cast<std::vector<json>*>(user)->push_back(json::parse(cover_json));
  return 1;
}

}  // namespace

TEST_CASE("version and status names")
{
  CHECK(std::strcmp(fgi_version(), "1.0.0") == 0);
  CHECK(std::strcmp(fgi_status_name(FGI_OK), "ok") == 0);
  CHECK(std::strcmp(fgi_status_name(FGI_CAP_EXHAUSTED), "cap-exhausted") == 0);
  CHECK(std::strcmp(fgi_status_name(FGI_PARSE_ERROR), "parse-error") == 0);
  CHECK(std::strcmp(fgi_status_name(FGI_DISCREPANCY), "discrepancy") == 0);
}

TEST_CASE("word lifecycle and measurements")
{
  owned_word w{must_parse("a^3 b^3", 2)};
  CHECK(fgi_word_rank(w.w) == 2);
  CHECK(fgi_word_length(w.w) == 6);
  CHECK(fgi_word_cyclic_length(w.w) == 6);

  owned_string printed;
  REQUIRE(fgi_word_print(w.w, &printed.p) == FGI_OK);
  owned_word again{must_parse(printed.str(), 2)};
  CHECK(fgi_word_length(again.w) == 6);

  owned_word conj{must_parse("b a b a^-1 b^-1", 2)};
  CHECK(fgi_word_length(conj.w) == 5);
  CHECK(fgi_word_cyclic_length(conj.w) == 1);
}

TEST_CASE("parse failures set the error message")
{
  fgi_word* w = nullptr;
  CHECK(fgi_word_parse("c", 2, &w) == FGI_PARSE_ERROR);
  CHECK(w == nullptr);
  CHECK(std::strlen(fgi_last_error()) > 0);

  owned_word ok{must_parse("ab", 2)};
  CHECK(std::strlen(fgi_last_error()) == 0);

  CHECK(fgi_word_parse(nullptr, 2, &w) == FGI_USAGE_ERROR);
}

TEST_CASE("primitivity and simplicity predicates")
{
  owned_word ab{must_parse("ab", 2)};
  owned_word sq{must_parse("a^2", 2)};
  owned_word pow{must_parse("a^4 b^4", 2)};
  int out = -1;
  REQUIRE(fgi_word_is_primitive(ab.w, &out) == FGI_OK);
  CHECK(out == 1);
  REQUIRE(fgi_word_is_primitive(sq.w, &out) == FGI_OK);
  CHECK(out == 0);
  REQUIRE(fgi_word_is_simple(pow.w, &out) == FGI_OK);
  CHECK(out == 0);

  owned_word trivial{must_parse("", 2)};
  CHECK(fgi_word_is_primitive(trivial.w, &out) == FGI_USAGE_ERROR);
  owned_word rank_one{must_parse("a", 1)};
  CHECK(fgi_word_is_simple(rank_one.w, &out) == FGI_USAGE_ERROR);
}

TEST_CASE("whitehead graph renders as undirected dot")
{
  owned_word w{must_parse("a^2 b^2", 2)};
  owned_string dot;
  REQUIRE(fgi_whitehead_graph_dot(w.w, &dot.p) == FGI_OK);
  std::string text = dot.str();
  CHECK(text.find("graph whitehead {") == 0);
  CHECK(text.find("--") != std::string::npos);
}

TEST_CASE("index search over the C surface")
{
  owned_word w{must_parse("a^3 b^3", 2)};
  int value = -1;
  owned_string cert;
  REQUIRE(fgi_index(w.w, FGI_KIND_PRIMITIVITY, nullptr, &value, &cert.p) ==
          FGI_OK);
  CHECK(value == 2);
  json doc = json::parse(cert.str());
  CHECK(doc["schema"] == "fgindex.certificate/1");
  CHECK(doc["kind"] == "primitivity");
  CHECK(doc["index"] == 2);
  CHECK(doc["cover"]["degree"] == 2);

  int simple = -1;
  REQUIRE(fgi_index(w.w, FGI_KIND_SIMPLICITY, nullptr, &simple, nullptr) ==
          FGI_OK);
  CHECK(simple == 2);

  CHECK(fgi_index(w.w, 2, nullptr, &value, nullptr) == FGI_USAGE_ERROR);
  CHECK(fgi_index(nullptr, 0, nullptr, &value, nullptr) == FGI_USAGE_ERROR);
}

TEST_CASE("cap exhaustion and guard refusal report the bound")
{
  owned_word sq{must_parse("a^2", 2)};
  int value = -1;
  owned_string doc_text;
  CHECK(fgi_index(sq.w, FGI_KIND_PRIMITIVITY, nullptr, &value, &doc_text.p) ==
        FGI_CAP_EXHAUSTED);
  CHECK(value == 1);
  CHECK(std::strlen(fgi_last_error()) > 0);
  json doc = json::parse(doc_text.str());
  CHECK(doc["status"] == "cap-exhausted");
  CHECK(doc["exhaustion"].size() == 1);

  fgi_index_options wider{2, 0, 0};
  REQUIRE(fgi_index(sq.w, FGI_KIND_PRIMITIVITY, &wider, &value, nullptr) ==
          FGI_OK);
  CHECK(value == 2);

  owned_word big{must_parse("a^6 b^6", 2)};
  fgi_index_options guarded_opts{0, 1, 0};
  owned_string refused_doc;
  CHECK(fgi_index(big.w, FGI_KIND_PRIMITIVITY, &guarded_opts, &value,
                  &refused_doc.p) == FGI_INFEASIBLE);
  CHECK(value == 1);
  CHECK(json::parse(refused_doc.str())["status"] == "guard-refused");
}

TEST_CASE("verify drivers return reports and statuses")
{
  owned_string report;
  REQUIRE(fgi_verify("thm4", R"({"n_from":2,"n_to":4})", &report.p) == FGI_OK);
  json doc = json::parse(report.str());
  CHECK(doc["schema"] == "fgindex.report/1");
  CHECK(doc["passed"] == 3);
  CHECK(doc["failed"] == 0);

  owned_string disc;
  CHECK(fgi_verify("prop4", nullptr, &disc.p) == FGI_DISCREPANCY);
  json disc_doc = json::parse(disc.str());
  CHECK(disc_doc["discrepancies"] == 1);
  CHECK(disc_doc["failed"] == 0);

  owned_string refused;
  CHECK(fgi_verify("thm2", R"({"i_from":4,"i_to":5,"degree_guard":4})",
                   &refused.p) == FGI_VERIFY_FAILED);
  json refused_doc = json::parse(refused.str());
  CHECK(refused_doc["failed"] == 1);

  CHECK(fgi_verify("thm9", "{}", nullptr) == FGI_USAGE_ERROR);
  CHECK(fgi_verify("thm4", "{", nullptr) == FGI_PARSE_ERROR);
  CHECK(fgi_verify(nullptr, "{}", nullptr) == FGI_USAGE_ERROR);
}

TEST_CASE("cover enumeration streams documents")
{
  std::vector<json> covers;
  long count = -1;
  REQUIRE(fgi_enumerate(2, 3, nullptr, collect_cover, &covers, &count) ==
          FGI_OK);
  CHECK(count == 13);
  REQUIRE(covers.size() == 13);
  CHECK(covers[0]["schema"] == "fgindex.cover/1");
  CHECK(covers[0]["degree"] == 3);

  covers.clear();
  owned_word filter{must_parse("a^2 b^2", 2)};
  REQUIRE(fgi_enumerate(2, 2, filter.w, collect_cover, &covers, &count) ==
          FGI_OK);
  CHECK(count == 3);

  covers.clear();
  REQUIRE(fgi_enumerate(2, 3, nullptr, stop_after_first, &covers, &count) ==
          FGI_OK);
  CHECK(count == 1);
  CHECK(covers.size() == 1);

  CHECK(fgi_enumerate(0, 2, nullptr, collect_cover, &covers, &count) ==
        FGI_USAGE_ERROR);
  CHECK(fgi_enumerate(2, 2, nullptr, nullptr, nullptr, &count) ==
        FGI_USAGE_ERROR);
  owned_word wrong_rank{must_parse("a b x3", 3)};
  CHECK(fgi_enumerate(2, 2, wrong_rank.w, collect_cover, &covers, &count) ==
        FGI_USAGE_ERROR);
}

TEST_CASE("construct artifacts by kind")
{
  owned_string lemma;
  REQUIRE(fgi_construct(R"({"kind":"lemma1","d":3})", &lemma.p) == FGI_OK);
  json lemma_doc = json::parse(lemma.str());
  CHECK(lemma_doc["schema"] == "fgindex.construct/1");
  CHECK(lemma_doc["construction"] == "double-cycle-basis");
  CHECK(lemma_doc["d"] == 3);

  owned_string glued;
  REQUIRE(fgi_construct(R"({"kind":"prop4","n":5,"t":5,"d":3,"dp":2})",
                        &glued.p) == FGI_OK);
  json glued_doc = json::parse(glued.str());
  CHECK(glued_doc["construction"] == "glued-cycles");
  CHECK(glued_doc["bound"] == 3);
  CHECK(glued_doc["checks"]["containment"] == true);

  owned_string power;
  REQUIRE(fgi_construct(
              R"({"kind":"power","sigma_a":[1,0],"sigma_b":[1,0]})",
              &power.p) == FGI_OK);
  json power_doc = json::parse(power.str());
  CHECK(power_doc["construction"] == "power-basis");
  CHECK(power_doc["k"] == 2);
  CHECK(power_doc["l"] == 2);
}

TEST_CASE("construct rejects bad parameters")
{
  owned_string out;
  CHECK(fgi_construct(R"({"kind":"prop4","n":4,"t":4,"d":2,"dp":2})",
                      &out.p) == FGI_USAGE_ERROR);
  CHECK(fgi_construct(R"({"kind":"power","sigma_a":[0,0],"sigma_b":[1,0]})",
                      &out.p) == FGI_USAGE_ERROR);
  CHECK(fgi_construct(R"({"kind":"power","sigma_a":[0,1],"sigma_b":[0,1]})",
                      &out.p) == FGI_USAGE_ERROR);
  CHECK(fgi_construct(R"({"kind":"power","sigma_a":[0],"sigma_b":[0,1]})",
                      &out.p) == FGI_USAGE_ERROR);
  CHECK(fgi_construct(R"({"kind":"spin"})", &out.p) == FGI_USAGE_ERROR);
  CHECK(fgi_construct("{", &out.p) == FGI_PARSE_ERROR);
  CHECK(fgi_construct(R"({"kind":"lemma1"})", &out.p) == FGI_PARSE_ERROR);
  CHECK(fgi_construct(nullptr, &out.p) == FGI_USAGE_ERROR);
}

TEST_CASE("construct dot renders the underlying graph")
{
  owned_string dot;
  REQUIRE(fgi_construct_dot(R"({"kind":"lemma1","d":2})", &dot.p) == FGI_OK);
  std::string text = dot.str();
  CHECK(text.find("digraph stallings {") == 0);
  CHECK(text.find("doublecircle") != std::string::npos);
  CHECK(text.find("->") != std::string::npos);
}

TEST_CASE("bounds tables render as csv")
{
  owned_string psi;
  owned_string lcm;
  REQUIRE(fgi_bounds_csv(50, 5, &psi.p, &lcm.p) == FGI_OK);

  std::string psi_text = psi.str();
  CHECK(psi_text.find("m,psi,ratio\n") == 0);
  CHECK(std::count(psi_text.begin(), psi_text.end(), '\n') == 51);

  std::string lcm_text = lcm.str();
  CHECK(lcm_text.find("i,n_i,d,log_n\n") == 0);
  CHECK(lcm_text.find("\n2,2,3,") != std::string::npos);

  owned_string psi_only;
  CHECK(fgi_bounds_csv(0, 5, &psi_only.p, nullptr) == FGI_USAGE_ERROR);
  REQUIRE(fgi_bounds_csv(10, 0, &psi_only.p, nullptr) == FGI_OK);
}
