#include "bforge/chain.hpp"

#include <algorithm>

#include "bforge/groebner.hpp"
#include "bforge/unipotent.hpp"

namespace bforge {

ChainRelation relation_from_name(const std::string& name) {
  if (name == "init_rlex") return ChainRelation::InitRlex;
  if (name == "init_hlex") return ChainRelation::InitHlex;
  if (name == "gin_rlex") return ChainRelation::GinRlex;
  if (name == "sat_init_hlex") return ChainRelation::SatInitHlex;
  throw Error(ErrorCode::UnknownRelation, "unknown chain relation: " + name);
}

const char* relation_name(ChainRelation relation) {
  switch (relation) {
    case ChainRelation::InitRlex: return "init_rlex";
    case ChainRelation::InitHlex: return "init_hlex";
    case ChainRelation::GinRlex: return "gin_rlex";
    case ChainRelation::SatInitHlex: return "sat_init_hlex";
  }
  return "?";
}

bool ChainReport::all_ok() const {
  return std::all_of(edges.begin(), edges.end(),
                     [](const ChainEdgeResult& e) { return e.ok(); });
}

namespace {

Ideal apply_relation(ChainRelation relation, const Ideal& source,
                     uint64_t seed, const Limits& lim) {
  const int n = source.width();
  switch (relation) {
    case ChainRelation::InitRlex:
      return Ideal::from_monomial(
          source.initial_ideal(TermOrder::rlex(n), lim));
    case ChainRelation::InitHlex:
      return Ideal::from_monomial(
          source.initial_ideal(TermOrder::hlex(n), lim));
    case ChainRelation::GinRlex:
      return Ideal::from_monomial(gin(source, TermOrder::rlex(n), seed, lim));
    case ChainRelation::SatInitHlex:
      return saturate(Ideal::from_monomial(
                          source.initial_ideal(TermOrder::hlex(n), lim)),
                      seed, lim);
  }
  throw Error(ErrorCode::UnknownRelation, "unhandled chain relation");
}

std::string pointwise_annotation(const std::vector<long>& from,
                                 const std::vector<long>& to) {
  bool le = true;
  bool ge = true;
  for (size_t k = 0; k < from.size(); ++k) {
    if (from[k] > to[k]) le = false;
    if (from[k] < to[k]) ge = false;
  }
  if (le && ge) return "=";
  if (le) return "<";
  if (ge) return ">";
  return "incomparable";
}

bool annotation_accepts(const std::string& required,
                        const std::string& actual) {
  if (required == "<=") return actual == "=" || actual == "<";
  return required == actual;
}

}  // namespace

ChainReport verify_chain(const std::vector<ChainEdge>& edges, int bound,
                         uint64_t seed, const Limits& lim) {
  ChainReport report;
  for (const ChainEdge& edge : edges) {
    if (edge.required_annotation && *edge.required_annotation != "=" &&
        *edge.required_annotation != "<" && *edge.required_annotation != "<=") {
      throw Error(ErrorCode::UnknownRelation,
                  "unknown edge annotation: " + *edge.required_annotation);
    }
    Ideal computed = apply_relation(edge.relation, edge.source, seed, lim);
    ChainEdgeResult result{edge.relation,
                           edge.label,
                           computed.equals(edge.expected, lim),
                           "",
                           false,
                           computed};
    const HilbertData h_from =
        hilbert_function_ideal(edge.source, bound, lim);
    const HilbertData h_to = hilbert_function_ideal(computed, bound, lim);
    result.annotation = pointwise_annotation(h_from.values, h_to.values);
    result.annotation_ok =
        !edge.required_annotation ||
        annotation_accepts(*edge.required_annotation, result.annotation);
    report.edges.push_back(std::move(result));
  }
  return report;
}

}  // namespace bforge
