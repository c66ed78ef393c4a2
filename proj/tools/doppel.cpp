// doppel: command-line front end.
//
//   doppel poset --poset og:6
//   doppel count pp --poset gr:4,8 --ell 4
//   doppel coeff --ambient gr:3,6 --w 2,1 --u 1,1
//   doppel doppel verify --triple B:3,6 --ell 3
//   doppel heap --type E7 --word 1,3,4,5,6,2
//   doppel export --triple B:2,4 --out b24.dot
//
// Exit status: 0 ok, 1 a check failed, 2 bad usage or input.

#include "dg/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace dg;

namespace {

bool g_json = false;

int exit_code(Err e) {
  switch (e) {
    case Err::ShapeAssertionFailed:
    case Err::InfusionMismatch:
    case Err::TripleValidationFailed:
    case Err::ExplosionGuard:
    case Err::FeasibilityGuard:
      return 1;
    default:
      return 2;
  }
}

void emit(const json& j, const std::string& plain) {
  if (g_json) std::cout << j.dump() << "\n";
  else std::cout << plain << (plain.empty() || plain.back() == '\n' ? "" : "\n");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::BadParams, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Err::BadParams, path + ": " + e.what());
  }
}

std::string values_str(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doppelganger posets, K-theoretic tableaux and minuscule Schubert calculus"};
  app.require_subcommand(1);
  app.fallthrough();  // --json may follow the subcommand
  app.add_flag("--json", g_json, "Machine-readable output (errors as JSON on stderr)");

  std::string poset_spec, triple_spec, ambient, w_text, u_text, v_text, input, out_path, type_tag, word_text;
  int ell = 1, threads = 1;

  auto* poset = app.add_subcommand("poset", "Describe a poset");
  poset->add_option("--poset", poset_spec, "gr:k,n lg:n og:n quadric:d cayley freudenthal rootA:n rootB:k,n "
                                            "rootH3 rootI2:m chain:n antichain:n dual:<spec> or a JSON file")
      ->required();

  auto* count = app.add_subcommand("count", "Count plane partitions, ideals, linear extensions");
  std::string what;
  count->add_option("what", what, "pp | ideals | linext | orderpoly")
      ->required()
      ->check(CLI::IsMember({"pp", "ideals", "linext", "orderpoly"}));
  count->add_option("--poset", poset_spec)->required();
  count->add_option("--ell", ell, "Height bound (pp, orderpoly)")->check(CLI::NonNegativeNumber);

  auto* coeff = app.add_subcommand("coeff", "K-theoretic structure coefficients");
  coeff->add_option("--ambient", ambient)->required();
  coeff->add_option("--w", w_text, "Partition or heap word")->required();
  coeff->add_option("--u", u_text, "Partition or heap word")->required();
  coeff->add_option("--v", v_text, "Single coefficient instead of the full product");
  coeff->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* dopp = app.add_subcommand("doppel", "Doppelganger bijections");
  std::string mode;
  dopp->add_option("mode", mode, "verify | map | invmap")->required()->check(CLI::IsMember({"verify", "map", "invmap"}));
  dopp->add_option("--triple", triple_spec, "B:k,n | H | I:n")->required();
  dopp->add_option("--ell", ell)->check(CLI::NonNegativeNumber);
  dopp->add_option("--input", input, "Plane partition JSON (map, invmap)");
  dopp->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* heap = app.add_subcommand("heap", "Heap of a word");
  heap->add_option("--type", type_tag, "A<n> B<n> D<n> E6 E7 H3 I2:<m>")->required();
  heap->add_option("--word", word_text, "e.g. 1,3,4 or s1s3s4")->required();

  auto* exp = app.add_subcommand("export", "Hasse diagram as DOT");
  exp->add_option("--poset", poset_spec);
  exp->add_option("--triple", triple_spec);
  exp->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*poset) {
      Poset P = load_poset(poset_spec);
      json j = poset_json(P);
      std::cout << (g_json ? j.dump() : j.dump(2)) << "\n";
      return 0;
    }

    if (*count) {
      Poset P = load_poset(poset_spec);
      if (what == "pp") {
        auto c = count_pp(P, ell);
        emit({{"poset", poset_spec}, {"ell", ell}, {"count", c}}, std::to_string(c));
      } else if (what == "ideals") {
        auto c = count_ideals(P);
        emit({{"poset", poset_spec}, {"count", c}}, std::to_string(c));
      } else if (what == "linext") {
        auto c = count_linear_extensions(P);
        emit({{"poset", poset_spec}, {"count", c}}, std::to_string(c));
      } else {
        auto v = order_polynomial_values(P, ell);
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        emit({{"poset", poset_spec}, {"values", v}}, s);
      }
      return 0;
    }

    if (*coeff) {
      Minuscule M = minuscule(ambient);
      Set w = parse_shape(M, w_text), u = parse_shape(M, u_text);
      KExpansion E;
      if (!v_text.empty()) {
        Set v = parse_shape(M, v_text);
        long long c = k_coefficient(M.P, w, u, v);
        if (c) E[v] = c;
      } else {
        E = k_product_expansion(M.P, w, u, threads);
      }
      json j = expansion_json(M, E);
      std::string plain;
      for (auto& t : j["terms"]) {
        std::string shape;
        for (auto& x : t["shape"]) shape += (shape.empty() ? "" : ",") + std::to_string(x.get<int>());
        long long c = t["coeff"].get<long long>();
        plain += (c > 0 ? "+" : "") + std::to_string(c) + "\t(" + shape + ")\n";
      }
      if (plain.empty()) plain = "0\n";
      emit(j, plain);
      return 0;
    }

    if (*dopp) {
      auto ctx = make_context(build_triple(triple_spec), ell);
      if (mode == "verify") {
        auto r = verify(ctx, threads);
        json j = report_json(r);
        std::cout << (g_json ? j.dump() : j.dump(2)) << "\n";
        return r.pass() ? 0 : 1;
      }
      if (input.empty()) throw Error(Err::BadParams, "--input is required for " + mode);
      json in = read_json_file(input);
      if (mode == "map") {
        auto pp = pp_from_json(ctx.t.X, in);
        auto out = forward(ctx, pp);
        json j = {{"triple", ctx.t.label}, {"ell", ell}, {"input", pp}, {"output", out}};
        emit(j, values_str(out));
      } else {
        auto pp = pp_from_json(ctx.t.Y, in);
        auto out = inverse(ctx, pp);
        json j = {{"triple", ctx.t.label}, {"ell", ell}, {"input", pp}, {"output", out}};
        emit(j, values_str(out));
      }
      return 0;
    }

    if (*heap) {
      auto C = CoxeterSystem::parse(type_tag);
      Word w = parse_word(word_text);
      Poset H = heap_from_word(C, w);
      json j = poset_json(H);
      j["type"] = C.tag();
      j["word"] = w;
      j["reduced"] = is_reduced(C, w);
      j["linear_extensions"] = count_linear_extensions(H);
      std::cout << (g_json ? j.dump() : j.dump(2)) << "\n";
      return 0;
    }

    if (*exp) {
      if (poset_spec.empty() == triple_spec.empty()) throw Error(Err::BadParams, "give exactly one of --poset, --triple");
      std::string dot = triple_spec.empty() ? export_dot(load_poset(poset_spec)) : export_dot(build_triple(triple_spec));
      if (out_path.empty()) {
        std::cout << dot;
      } else {
        std::ofstream o(out_path);
        if (!o) throw Error(Err::BadParams, "cannot write " + out_path);
        o << dot;
      }
      return 0;
    }
  } catch (const Error& e) {
    if (g_json) std::cerr << json{{"error", err_name(e.code)}, {"message", e.what()}}.dump() << "\n";
    else std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code);
  }
  return 0;
}
