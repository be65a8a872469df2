#include "fgindex/json_io.hpp"

#include <stdexcept>

namespace fgx::jsonio {

namespace {

json letters_to_json(const Word& w)
{
  json a = json::array();
  for (Letter x : w.letters()) a.push_back(static_cast<int>(x));
  return a;
}

json edges_to_json(const std::vector<AGraphEdge>& edges)
{
  json a = json::array();
  for (const auto& e : edges)
    a.push_back({e.from, e.to, static_cast<int>(e.label)});
  return a;
}

const char* how_name(PrimitivityWitness::How how)
{
  switch (how) {
    case PrimitivityWitness::How::TrivialLetter: return "trivial-letter";
    case PrimitivityWitness::How::SingleOccurrence: return "single-occurrence";
    case PrimitivityWitness::How::NoCutVertex: return "no-cut-vertex";
    case PrimitivityWitness::How::Minimization: return "minimization";
  }
  return "minimization";
}

json trace_to_json(const std::vector<WhiteheadAutomorphism>& trace)
{
  json a = json::array();
  for (const auto& t : trace) a.push_back(automorphism_to_json(t));
  return a;
}

}  // namespace

json word_to_json(const Word& w)
{
  return {{"rank", w.rank()},
          {"letters", letters_to_json(w)},
          {"text", print_word(w)}};
}

json agraph_to_json(const AGraph& g)
{
  return {{"rank", g.rank()},
          {"vertices", g.vertex_count()},
          {"basepoint", g.basepoint()},
          {"edges", edges_to_json(g.edges())}};
}

AGraph agraph_from_json(const json& j)
{
  std::vector<AGraphEdge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("graph edge must be [from, to, label]");
    edges.push_back({e[0].get<std::int32_t>(), e[1].get<std::int32_t>(),
                     static_cast<Letter>(e[2].get<int>())});
  }
  return AGraph(j.at("rank").get<int>(), j.at("vertices").get<std::int32_t>(),
                j.at("basepoint").get<std::int32_t>(), std::move(edges));
}

json cover_to_json(const CoverPermutations& c)
{
  json perm = json::array();
  for (const auto& p : c.perm) perm.push_back(p);
  return {{"rank", c.rank}, {"degree", c.degree}, {"perm", perm}};
}

CoverPermutations cover_from_json(const json& j)
{
  CoverPermutations c;
  c.rank = j.at("rank").get<int>();
  c.degree = j.at("degree").get<std::int32_t>();
  for (const auto& p : j.at("perm"))
    c.perm.push_back(p.get<std::vector<std::int32_t>>());
  if (static_cast<int>(c.perm.size()) != c.rank)
    throw std::invalid_argument("cover needs one permutation per generator");
  return c;
}

json tree_to_json(const SpanningTree& t)
{
  json labels = json::array();
  for (Letter l : t.parent_label) labels.push_back(static_cast<int>(l));
  return {{"root", t.root},
          {"parent", t.parent},
          {"parent_label", labels},
          {"order", t.order}};
}

json automorphism_to_json(const WhiteheadAutomorphism& a)
{
  if (a.kind == WhiteheadAutomorphism::Kind::LetterPermutation) {
    json images = json::array();
    for (Letter x : a.images) images.push_back(static_cast<int>(x));
    return {{"kind", "permutation"}, {"rank", a.rank}, {"images", images}};
  }
  return {{"kind", "multiplier"},
          {"rank", a.rank},
          {"multiplier", static_cast<int>(a.multiplier)},
          {"set_mask", a.set_mask}};
}

json primitivity_witness_to_json(const PrimitivityWitness& w)
{
  return {{"primitive", w.primitive},
          {"how", how_name(w.how)},
          {"generator", w.generator},
          {"minimal", word_to_json(w.minimization.minimal.rep())},
          {"trace", trace_to_json(w.minimization.trace)},
          {"lengths", w.minimization.lengths}};
}

json simplicity_witness_to_json(const SimplicityWitness& w)
{
  return {{"simple", w.simple},
          {"image", word_to_json(w.image)},
          {"trace", trace_to_json(w.trace)},
          {"omitted_generator", w.omitted_generator},
          {"level_set_size", w.level_set_size}};
}

json subgroup_basis_to_json(const SubgroupBasis& b)
{
  json words = json::array();
  for (const Word& w : b.words()) words.push_back(word_to_json(w));
  json dual_words = json::array();
  for (const Word& w : b.dual.words) dual_words.push_back(word_to_json(w));
  json out = {{"graph", agraph_to_json(b.graph)},
              {"tree", tree_to_json(b.tree)},
              {"dual_edges", edges_to_json(b.dual.nontree_edges)},
              {"dual_words", dual_words},
              {"words", words},
              {"change", nullptr}};
  if (b.change) {
    json moves = json::array();
    for (const NielsenMove& m : b.change->moves)
      moves.push_back(
          {{"side", m.side == NielsenMove::Side::Left ? "left" : "right"},
           {"target", m.target},
           {"other", m.other}});
    json map = json::array();
    for (const Word& w : b.change->old_to_new) map.push_back(word_to_json(w));
    out["change"] = {{"moves", moves}, {"old_to_new", map}};
  }
  return out;
}

json certificate_to_json(const IndexCertificate& c)
{
  json basis = json::array();
  for (const Word& w : c.basis) basis.push_back(word_to_json(w));
  json exhaustion = json::array();
  for (const DegreeExhaustion& d : c.exhaustion)
    exhaustion.push_back({{"degree", d.degree},
                          {"enumerated", d.enumerated},
                          {"containing", d.containing},
                          {"rejected", d.rejected}});
  json out = {{"schema", "fgindex.certificate/1"},
              {"kind",
               c.kind == IndexKind::Primitivity ? "primitivity" : "simplicity"},
              {"word", word_to_json(c.word)},
              {"index", c.index},
              {"cover", nullptr},
              {"tree", nullptr},
              {"basis", basis},
              {"rewritten", word_to_json(c.rewritten)},
              {"exhaustion", exhaustion}};
  if (c.cover) out["cover"] = cover_to_json(*c.cover);
  if (c.tree) out["tree"] = tree_to_json(*c.tree);
  if (c.kind == IndexKind::Primitivity)
    out["evidence"] = primitivity_witness_to_json(c.primitivity);
  else
    out["evidence"] = simplicity_witness_to_json(c.simplicity);
  return out;
}

json report_to_json(const VerifyReport& r)
{
  json cases = json::array();
  for (const VerifyCase& c : r.cases)
    cases.push_back({{"name", c.name},
                     {"pass", c.pass},
                     {"discrepancy", c.discrepancy},
                     {"detail", c.detail}});
  return {{"schema", "fgindex.report/1"},
          {"selector", r.selector},
          {"passed", r.passed},
          {"failed", r.failed},
          {"discrepancies", r.discrepancies},
          {"cases", cases}};
}

json glued_certificate_to_json(const GluedCyclesCertificate& c)
{
  return {{"schema", "fgindex.construct/1"},
          {"construction", "glued-cycles"},
          {"n", c.n},
          {"t", c.t},
          {"d", c.d},
          {"dp", c.dp},
          {"k", c.k},
          {"kp", c.kp},
          {"r", c.r},
          {"rp", c.rp},
          {"bound", c.bound},
          {"partial", agraph_to_json(c.partial)},
          {"cover", agraph_to_json(c.cover)},
          {"basis", subgroup_basis_to_json(c.basis)},
          {"x", word_to_json(c.x)},
          {"y1", word_to_json(c.y1)},
          {"y2", word_to_json(c.y2)},
          {"eta", word_to_json(c.eta)},
          {"eta_image", word_to_json(c.eta_image)},
          {"rewritten", word_to_json(c.rewritten)},
          {"checks",
           {{"substitution", c.substitution_ok},
            {"image", c.image_ok},
            {"single_occurrence", c.single_occurrence_ok},
            {"containment", c.contains_ok},
            {"primitive_checked", c.primitive_checked},
            {"primitive", c.primitive_ok}}}};
}

json power_basis_to_json(const PowerBasis& p)
{
  return {{"schema", "fgindex.construct/1"},
          {"construction", "power-basis"},
          {"cover", cover_to_json(p.cover)},
          {"basis", subgroup_basis_to_json(p.basis)},
          {"k", p.k},
          {"l", p.l},
          {"a_index", p.a_index},
          {"b_index", p.b_index},
          {"case", p.proof_case}};
}

json lemma_basis_to_json(const SubgroupBasis& b, int d)
{
  return {{"schema", "fgindex.construct/1"},
          {"construction", "double-cycle-basis"},
          {"d", d},
          {"basis", subgroup_basis_to_json(b)}};
}

json rs_report_to_json(const RosserSchoenfeldReport& r)
{
  return {{"m_max", r.m_max},
          {"lower_ok", r.lower_ok},
          {"upper_ok", r.upper_ok},
          {"ratio_cap_ok", r.ratio_cap_ok},
          {"argmax_ok", r.argmax_ok},
          {"argmax", r.argmax},
          {"max_ratio", r.max_ratio},
          {"violations", r.violations}};
}

json bounds_scan_to_json(const BoundsScan& s)
{
  json rows = json::array();
  for (const LcmSequenceRow& r : s.rows)
    rows.push_back({{"i", r.i},
                    {"n", r.n_dec},
                    {"d", r.d_value},
                    {"log_n", r.log_n}});
  return {{"c_hat", s.c_hat},
          {"c_hat_argmax", s.c_hat_argmax},
          {"exact_ok", s.exact_ok},
          {"rows", rows}};
}

json discrepancy_record(const std::string& word, std::int32_t published,
                        std::int32_t computed, const json& certificates,
                        const std::string& note)
{
  return {{"schema", "fgindex.discrepancy/1"},
          {"word", word},
          {"published", published},
          {"computed", computed},
          {"certificates", certificates},
          {"note", note}};
}

namespace {

const char* json_type_name(const json& v)
{
  if (v.is_object()) return "object";
  if (v.is_array()) return "array";
  if (v.is_string()) return "string";
  if (v.is_boolean()) return "boolean";
  if (v.is_null()) return "null";
  if (v.is_number_integer() || v.is_number_unsigned()) return "integer";
  return "number";
}

bool type_matches(const json& v, const std::string& t)
{
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (t == "number") return v.is_number();
  return false;
}

bool validate_at(const json& value, const json& schema, const std::string& path,
                 std::string* error)
{
  auto fail = [&](const std::string& msg) {
    if (error) *error = "at " + path + ": " + msg;
    return false;
  };

  if (schema.contains("const")) {
    if (value != schema["const"]) return fail("value differs from const");
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"])
      if (value == e) {
        found = true;
        break;
      }
    if (!found) return fail("value not in enum");
  }
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else {
      for (const auto& alt : t)
        if (type_matches(value, alt.get<std::string>())) {
          ok = true;
          break;
        }
    }
    if (!ok)
      return fail(std::string("expected type ") + t.dump() + ", found " +
                  json_type_name(value));
  }
  if (schema.contains("required") && value.is_object()) {
    for (const auto& key : schema["required"])
      if (!value.contains(key.get<std::string>()))
        return fail("missing required key " + key.get<std::string>());
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items())
      if (value.contains(key))
        if (!validate_at(value[key], sub, path + "." + key, error))
          return false;
  }
  if (schema.contains("items") && value.is_array()) {
    std::size_t i = 0;
    for (const auto& elem : value) {
      if (!validate_at(elem, schema["items"],
                       path + "[" + std::to_string(i) + "]", error))
        return false;
      ++i;
    }
  }
  return true;
}

}  // namespace

bool validate_schema(const json& value, const json& schema, std::string* error)
{
  if (error) error->clear();
  return validate_at(value, schema, "$", error);
}

}  // namespace fgx::jsonio
