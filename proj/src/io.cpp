#include "dg/io.hpp"

#include <fstream>
#include <sstream>

namespace dg {

namespace {

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

int int_param(const std::string& spec, const std::string& prefix) {
  try {
    size_t pos = 0;
    int v = std::stoi(spec.substr(prefix.size()), &pos);
    if (pos + prefix.size() == spec.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Err::BadParams, "bad parameter in '" + spec + "'");
}

bool is_rectangle(const Poset& X) {
  if (!X.has_coords()) return false;
  int R = 0, C = 0;
  for (auto& [r, c] : X.coords) R = std::max(R, r + 1), C = std::max(C, c + 1);
  return R * C == X.size();
}

}  // namespace

Poset load_poset(const std::string& spec) {
  if (starts(spec, "dual:")) return dual(load_poset(spec.substr(5)));
  if (starts(spec, "chain:")) return chain(int_param(spec, "chain:"));
  if (starts(spec, "antichain:")) return antichain(int_param(spec, "antichain:"));
  if (starts(spec, "root")) return root_poset(spec);
  if (starts(spec, "gr:") || starts(spec, "lg:") || starts(spec, "og:") || starts(spec, "quadric:") ||
      spec == "cayley" || spec == "freudenthal")
    return minuscule_poset(spec);
  std::ifstream in(spec);
  if (!in) throw Error(Err::BadParams, "unknown poset '" + spec + "' (not a catalog name or readable file)");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Err::BadParams, spec + ": " + e.what());
  }
  return poset_from_json(j);
}

json poset_json(const Poset& P) {
  json j;
  j["size"] = P.size();
  json cov = json::array();
  for (auto& [a, b] : P.covers()) cov.push_back({a, b});
  j["covers"] = cov;
  if (P.has_labels()) j["labels"] = P.labels;
  if (P.has_coords()) {
    json c = json::array();
    for (auto& [r, col] : P.coords) c.push_back({r, col});
    j["coords"] = c;
  }
  if (P.size() && uniformly_graded(P)) j["rank_sizes"] = rank_function(P).sizes();
  return j;
}

Poset poset_from_json(const json& j) {
  try {
    int n = j.at("size").get<int>();
    std::vector<Cover> rel;
    for (auto& c : j.value("covers", json::array())) rel.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    Poset P = Poset::from_covers(n, rel);
    if (j.contains("labels")) P.labels = j["labels"].get<std::vector<int>>();
    if (j.contains("coords"))
      for (auto& c : j["coords"]) P.coords.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    if ((P.has_labels() && (int)P.labels.size() != n) || (P.has_coords() && (int)P.coords.size() != n))
      throw Error(Err::BadParams, "labels/coords length differs from size");
    return P;
  } catch (const json::exception& e) {
    throw Error(Err::BadParams, std::string("poset JSON: ") + e.what());
  }
}

std::string export_dot(const Poset& P, const std::vector<std::pair<std::string, Set>>& highlights) {
  std::ostringstream o;
  o << "digraph P {\n";
  if (P.size()) o << "  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < P.size(); ++x) {
    o << "  " << x << " [label=\"" << (P.has_labels() ? "s" + std::to_string(P.labels[x]) : std::to_string(x))
      << "\"";
    for (auto& [style, s] : highlights)
      if (s[x]) o << ", " << style;
    o << "];\n";
  }
  for (auto& [a, b] : P.covers()) o << "  " << a << " -> " << b << ";\n";
  o << "}\n";
  return o.str();
}

std::string export_dot(const Triple& t) {
  Set vu(t.Z.P.size());
  for (int x = 0; x < t.Z.P.size(); ++x) vu[x] = t.v[x] && !t.u[x];
  return export_dot(t.Z.P, {{"style=filled, fillcolor=gray", t.w}, {"penwidth=3", vu}});
}

Set parse_shape(const Minuscule& M, const std::string& text) {
  if (M.P.has_coords() && text.find('s') == std::string::npos) {
    std::vector<int> lambda;
    if (!text.empty()) {
      std::stringstream ss(text);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          lambda.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw Error(Err::BadParams, "bad partition '" + text + "'");
        }
      }
    }
    return shape_from_partition(M, lambda);
  }
  return shape_from_word(M, text.empty() ? Word{} : parse_word(text));
}

json shape_json(const Minuscule& M, const Set& s) {
  if (M.P.has_coords()) return partition_of(M, s);
  return members(s);
}

json expansion_json(const Minuscule& M, const KExpansion& E) {
  std::vector<std::pair<Set, long long>> terms(E.begin(), E.end());
  std::stable_sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return set_size(a.first) < set_size(b.first); });
  json arr = json::array();
  for (auto& [s, c] : terms) arr.push_back({{"shape", shape_json(M, s)}, {"coeff", c}});
  return {{"ambient", M.tag}, {"terms", arr}};
}

std::vector<int> pp_from_json(const Poset& X, const json& j) {
  try {
    if (j.is_object()) return j.at("values").get<std::vector<int>>();
    if (j.is_array() && (j.empty() || !j[0].is_array())) return j.get<std::vector<int>>();
    if (!j.is_array()) throw Error(Err::BadParams, "plane partition must be an array or {\"values\": [...]}");
    if (!X.has_coords() || !is_rectangle(X)) throw Error(Err::BadParams, "matrix input needs a rectangular poset");
    int R = 0, C = 0;
    for (auto& [r, c] : X.coords) R = std::max(R, r + 1), C = std::max(C, c + 1);
    std::vector<int> pp(X.size(), 0);
    for (size_t i = 0; i < j.size(); ++i)
      for (size_t k = 0; k < j[i].size(); ++k) {
        int r = R - 1 - (int)k, c = C - 1 - (int)i;
        if (r < 0 || c < 0) throw Error(Err::BadParams, "matrix does not fit the rectangle");
        for (int x = 0; x < X.size(); ++x)
          if (X.coords[x] == Cell{r, c}) pp[x] = j[i][k].get<int>();
      }
    return pp;
  } catch (const json::exception& e) {
    throw Error(Err::BadParams, std::string("plane partition JSON: ") + e.what());
  }
}

json report_json(const VerifyReport& r) {
  return {{"pass", r.pass()},
          {"triple", r.triple},
          {"ell", r.ell},
          {"m", r.m},
          {"counts",
           {{"inputs", r.inputs},
            {"pp_X", r.count_X},
            {"pp_Y", r.count_Y},
            {"pp_dual_X", r.count_dual_X},
            {"pp_dual_Y", r.count_dual_Y},
            {"images", r.images},
            {"syt_X", r.syt_X},
            {"syt_Y", r.syt_Y}}},
          {"well_defined", r.well_defined},
          {"injective", r.injective},
          {"surjective", r.surjective},
          {"round_trip", r.round_trip},
          {"syt_bijective", r.syt_bijective},
          {"failures", r.failures}};
}

}  // namespace dg
