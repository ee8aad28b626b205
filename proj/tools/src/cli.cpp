#include "satip_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "satip/combinat/characters.hpp"
#include "satip/combinat/tableaux.hpp"
#include "satip/error.hpp"
#include "satip/exact/linalg.hpp"
#include "satip/io/json.hpp"
#include "satip/ip/saturated_ip.hpp"
#include "satip/multiplicity/multiplicity.hpp"
#include "satip_cli/reproduce.hpp"

namespace satip::cli {

json to_json(const CommandResult& r) {
  return {{"command", r.command}, {"inputs", r.inputs}, {"outputs", r.outputs}, {"wall_time_ms", r.wall_time_ms}};
}

CommandResult command_result_from_json(const json& j) {
  try {
    CommandResult r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.outputs = j.at("outputs");
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

namespace {

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool is_table(const json& outputs) {
  return outputs.contains("rows") && outputs["rows"].is_array() && !outputs["rows"].empty() &&
         outputs["rows"].front().is_object();
}

std::vector<std::string> table_columns(const json& rows) {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [key, value] : row.items())
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  return columns;
}

std::string render_csv(const CommandResult& r) {
  std::ostringstream out;
  if (is_table(r.outputs)) {
    const json& rows = r.outputs["rows"];
    const auto columns = table_columns(rows);
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_escape(columns[i]);
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << (row.contains(columns[i]) ? csv_escape(cell(row[columns[i]])) : "");
      out << '\n';
    }
    return out.str();
  }
  out << "key,value\n";
  for (const auto& [key, value] : r.outputs.items()) out << csv_escape(key) << ',' << csv_escape(cell(value)) << '\n';
  return out.str();
}

std::string render_pretty(const CommandResult& r) {
  std::ostringstream out;
  out << r.command << '\n';
  for (const auto& [key, value] : r.inputs.items()) out << "  " << key << " = " << cell(value) << '\n';
  if (is_table(r.outputs)) {
    const json& rows = r.outputs["rows"];
    const auto columns = table_columns(rows);
    std::vector<std::size_t> width;
    for (const auto& c : columns) width.push_back(c.size());
    for (const auto& row : rows)
      for (std::size_t i = 0; i < columns.size(); ++i)
        if (row.contains(columns[i])) width[i] = std::max(width[i], cell(row[columns[i]]).size());
    auto line = [&](const std::function<std::string(std::size_t)>& text) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        const std::string s = text(i);
        out << (i ? "  " : "") << s << std::string(width[i] - s.size(), ' ');
      }
      out << '\n';
    };
    line([&](std::size_t i) { return columns[i]; });
    for (const auto& row : rows)
      line([&](std::size_t i) { return row.contains(columns[i]) ? cell(row[columns[i]]) : std::string(); });
    for (const auto& [key, value] : r.outputs.items())
      if (key != "rows") out << key << ": " << cell(value) << '\n';
  } else {
    for (const auto& [key, value] : r.outputs.items()) out << key << ": " << cell(value) << '\n';
  }
  out << "wall_time_ms: " << r.wall_time_ms << '\n';
  return out.str();
}

}  // namespace

std::string render(const CommandResult& r, Format format) {
  switch (format) {
    case Format::Json:
      return to_json(r).dump() + "\n";
    case Format::Csv:
      return render_csv(r);
    case Format::Pretty:
      return render_pretty(r);
  }
  return {};
}

namespace {

using combinat::Partition;
using exact::Integer;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Partition partition_arg(const std::string& name, const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const Error& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

std::vector<long> longs_arg(const std::string& name, const std::string& text) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw UsageError("--" + name + ": cannot parse \"" + piece + "\"");
    }
  }
  return out;
}

exact::RationalVector rationals_arg(const std::string& name, const std::string& text) {
  exact::RationalVector out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      out.push_back(exact::parse_rational(piece));
    } catch (const Error&) {
      throw UsageError("--" + name + ": cannot parse \"" + piece + "\"");
    }
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    buffer << in.rdbuf();
  }
  try {
    return json::parse(buffer.str());
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

json expansion_json(const multiplicity::SchurExpansion& e) {
  json terms = json::array();
  for (const auto& [p, c] : e.terms()) terms.push_back({{"partition", p.to_string()}, {"coefficient", integer_json(c)}});
  return terms;
}

json stretch_json(const multiplicity::StretchResult& r) {
  json samples = json::array();
  for (const Integer& s : r.samples) samples.push_back(integer_json(s));
  auto optional_index = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
  return {{"samples", samples},
          {"quasi_polynomial", io::quasipolynomial_to_json(r.quasi_polynomial)},
          {"generating_function", io::rational_function_to_json(r.generating_function)},
          {"positive_form", r.positive_form ? io::positive_form_to_json(*r.positive_form) : json(nullptr)},
          {"index", r.index},
          {"saturation_index", optional_index(r.saturation_index)},
          {"positivity_index", optional_index(r.positivity_index)}};
}

multiplicity::StretchKind parse_kind(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
  text.erase(std::remove(text.begin(), text.end(), '_'), text.end());
  using K = multiplicity::StretchKind;
  static const std::map<std::string, K> kinds = {{"lr", K::LR},           {"kronecker2row", K::Kronecker2Row},
                                                 {"plethysm", K::Plethysm}, {"syminv", K::SymInv},
                                                 {"gphilbert", K::GpHilbert}};
  const auto it = kinds.find(text);
  if (it == kinds.end()) throw UsageError("--kind: unknown kind " + text);
  return it->second;
}

struct Options {
  std::string alpha, beta, lambda, mu, pi, rho, content, weight, file, p_file, q_file, matrix, kind, num, den;
  long n = -1, k = 0, guard = -1, a = 2, b = 2, side = 0, degree = -1, max_a = 0;
  long period_bound = -1, degree_bound = -1;
  std::string sie, pie, c;
  std::size_t threads = 1;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiplicities, quasi-polynomials and saturated integer programming", "satip"};
  app.require_subcommand(1);
  bool as_json = false, as_csv = false, as_pretty = false;
  auto* json_flag = app.add_flag("--json", as_json, "JSON output (default)");
  auto* csv_flag = app.add_flag("--csv", as_csv, "CSV output");
  auto* pretty_flag = app.add_flag("--pretty", as_pretty, "aligned text output");
  json_flag->excludes(csv_flag)->excludes(pretty_flag);
  csv_flag->excludes(pretty_flag);

  Options o;
  CommandResult result;
  std::function<void()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& description,
                  std::function<void()> body) {
    CLI::App* sub = parent->add_subcommand(name, description);
    sub->fallthrough();
    sub->callback([&, sub, body, parent] {
      result.command = (parent == &app ? "" : parent->get_name() + " ") + sub->get_name();
      action = body;
    });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->require_subcommand(1);
    sub->fallthrough();
    return sub;
  };
  auto partition_option = [&](CLI::App* sub, const std::string& name, std::string& target, bool required = true) {
    auto* opt = sub->add_option("--" + name, target, "partition, comma-separated parts");
    if (required) opt->required();
  };
  auto set_value = [&](const Integer& v) { result.outputs["value"] = integer_json(v); };
  auto echo = [&](const std::string& key, const json& v) { result.inputs[key] = v; };

  {
    auto* sub = leaf(&app, "lr", "Littlewood-Richardson coefficient c_{alpha,beta}^lambda", [&] {
      const Partition a = partition_arg("alpha", o.alpha), b = partition_arg("beta", o.beta),
                      l = partition_arg("lambda", o.lambda);
      echo("alpha", o.alpha), echo("beta", o.beta), echo("lambda", o.lambda);
      set_value(combinat::lr_coefficient(a, b, l));
    });
    partition_option(sub, "alpha", o.alpha);
    partition_option(sub, "beta", o.beta);
    partition_option(sub, "lambda", o.lambda);
  }
  {
    auto* sub = leaf(&app, "kostka", "Kostka number K_{lambda,content}", [&] {
      const Partition l = partition_arg("lambda", o.lambda);
      echo("lambda", o.lambda), echo("content", o.content);
      set_value(combinat::kostka(l, longs_arg("content", o.content)));
    });
    partition_option(sub, "lambda", o.lambda);
    sub->add_option("--content", o.content, "weight, comma-separated (zeros allowed)")->required();
  }
  auto triple = [&](CLI::App* sub) {
    partition_option(sub, "lambda", o.lambda);
    partition_option(sub, "mu", o.mu);
    partition_option(sub, "pi", o.pi);
  };
  auto read_triple = [&] {
    echo("lambda", o.lambda), echo("mu", o.mu), echo("pi", o.pi);
    return std::make_tuple(partition_arg("lambda", o.lambda), partition_arg("mu", o.mu), partition_arg("pi", o.pi));
  };
  {
    auto* kron = group("kron", "Kronecker coefficients");
    auto* chr = leaf(kron, "char", "character inner product", [&] {
      const auto [l, m, p] = read_triple();
      const long guard = o.guard < 0 ? multiplicity::kDefaultCharacterGuard : o.guard;
      echo("guard", guard);
      set_value(multiplicity::kronecker_char(l, m, p, guard));
    });
    triple(chr);
    chr->add_option("--guard", o.guard, "largest size accepted");
    auto* two = leaf(kron, "tworow", "two-row lambda, mu via GL_2 x GL_2 in GL_4", [&] {
      const auto [l, m, p] = read_triple();
      set_value(multiplicity::kronecker_two_row(l, m, p));
    });
    triple(two);
    auto* kli = leaf(kron, "klimyk", "branching GL_ab to GL_a x GL_b; pi is the GL_ab label", [&] {
      const auto [l, m, p] = read_triple();
      echo("a", o.a), echo("b", o.b);
      const auto a = static_cast<std::size_t>(o.a), b = static_cast<std::size_t>(o.b);
      set_value(multiplicity::klimyk_branching(a * b, {a, b}, p, l, m));
    });
    triple(kli);
    kli->add_option("--a", o.a, "rank of the first factor")->check(CLI::PositiveNumber);
    kli->add_option("--b", o.b, "rank of the second factor")->check(CLI::PositiveNumber);
  }
  {
    auto* pl = group("plethysm", "Schur expansion of s_lambda[s_mu]");
    auto body = [&](bool weyl) {
      return [&, weyl] {
        const Partition l = partition_arg("lambda", o.lambda), m = partition_arg("mu", o.mu);
        const long guard = o.guard < 0 ? multiplicity::kDefaultPlethysmGuard : o.guard;
        echo("lambda", o.lambda), echo("mu", o.mu), echo("guard", guard);
        multiplicity::SchurExpansion e;
        if (weyl) {
          if (o.k > 0) echo("k", o.k);
          e = multiplicity::plethysm_weyl_substitution(l, m, static_cast<std::size_t>(std::max(o.k, 0L)), guard);
        } else {
          e = multiplicity::plethysm_p_basis(l, m, guard);
        }
        result.outputs["terms"] = expansion_json(e);
      };
    };
    for (auto [name, weyl] : {std::pair{"pbasis", false}, std::pair{"weyl", true}}) {
      auto* sub = leaf(pl, name, weyl ? "tableau substitution and inverse Kostka" : "power-sum basis", body(weyl));
      partition_option(sub, "lambda", o.lambda);
      partition_option(sub, "mu", o.mu);
      sub->add_option("--guard", o.guard, "largest |lambda||mu| accepted");
      if (weyl) sub->add_option("--k", o.k, "number of variables (default |lambda| * height(mu))");
    }
  }
  {
    auto* ch = group("char", "symmetric group characters");
    for (auto [name, frob] : {std::pair{"mn", false}, std::pair{"frobenius", true}}) {
      auto* sub = leaf(ch, name, frob ? "Frobenius formula" : "Murnaghan-Nakayama rule", [&, frob = frob] {
        const Partition l = partition_arg("lambda", o.lambda), r = partition_arg("rho", o.rho);
        echo("lambda", o.lambda), echo("rho", o.rho);
        set_value(frob ? combinat::frobenius_character(l, r) : combinat::sn_character(l, r));
      });
      partition_option(sub, "lambda", o.lambda);
      sub->add_option("--rho", o.rho, "cycle type")->required();
    }
  }
  {
    auto* sub = leaf(&app, "kostant", "Kostant partition function or weight multiplicity", [&] {
      if (!o.weight.empty()) {
        echo("weight", o.weight);
        const auto w = longs_arg("weight", o.weight);
        set_value(combinat::kostant_partition(w.size(), w));
      } else {
        if (o.lambda.empty() && o.mu.empty()) throw UsageError("kostant needs --weight or --lambda with --mu");
        echo("lambda", o.lambda), echo("mu", o.mu);
        set_value(combinat::kostant_weight_multiplicity(partition_arg("lambda", o.lambda), longs_arg("mu", o.mu)));
      }
    });
    sub->add_option("--weight", o.weight, "simple-root coordinates of a weight of A_r");
    partition_option(sub, "lambda", o.lambda, false);
    sub->add_option("--mu", o.mu, "weight, comma-separated");
  }
  auto read_polytope = [&](const std::string& option, const std::string& path) {
    echo(option, path);
    return io::polytope_from_json(read_json_file(path));
  };
  {
    auto* eh = group("ehrhart", "lattice point counts of dilates");
    auto* samples = leaf(eh, "samples", "f_P(n) for n = 1..N", [&] {
      const long n = o.n < 0 ? 10 : o.n;
      const auto p = read_polytope("file", o.file);
      echo("n", n);
      json values = json::array();
      for (const Integer& v : ip::ehrhart_samples(p, n)) values.push_back(integer_json(v));
      result.outputs["samples"] = values;
    });
    auto* quasi = leaf(eh, "quasipoly", "fitted Ehrhart quasi-polynomial", [&] {
      const auto p = read_polytope("file", o.file);
      const long period = o.period_bound < 0 ? 1 : o.period_bound;
      echo("period_bound", period);
      std::optional<std::size_t> degree;
      if (o.degree_bound >= 0) {
        degree = static_cast<std::size_t>(o.degree_bound);
        echo("degree_bound", o.degree_bound);
      }
      result.outputs["quasi_polynomial"] =
          io::quasipolynomial_to_json(ip::ehrhart_quasipoly(p, static_cast<std::size_t>(period), degree));
    });
    auto* index = leaf(eh, "index", "index via affine span and Smith form", [&] {
      set_value(ip::ehrhart_index(read_polytope("file", o.file)));
    });
    for (auto* sub : {samples, quasi, index}) sub->add_option("--file", o.file, "polytope JSON ('-' for stdin)")->required();
    samples->add_option("--n", o.n, "horizon N");
    quasi->add_option("--period-bound", o.period_bound, "largest period tried");
    quasi->add_option("--degree-bound", o.degree_bound, "largest degree tried (default dim P)");
  }
  {
    auto* sat = group("satip", "saturated integer programming");
    auto* sub = leaf(sat, "decide", "does cP contain an integer point, for c above the estimate", [&] {
      ip::SaturatedIPInstance inst{read_polytope("file", o.file), std::nullopt, std::nullopt};
      if (!o.sie.empty()) inst.sie = exact::parse_integer(o.sie), echo("sie", o.sie);
      if (!o.pie.empty()) inst.pie = exact::parse_integer(o.pie), echo("pie", o.pie);
      if (inst.sie.has_value() == inst.pie.has_value()) throw UsageError("give exactly one of --sie and --pie");
      echo("c", o.c);
      result.outputs["value"] = ip::saturated_ip_decide(inst, exact::parse_integer(o.c));
    });
    sub->add_option("--file", o.file, "polytope JSON")->required();
    sub->add_option("--sie", o.sie, "saturation index estimate");
    sub->add_option("--pie", o.pie, "positivity index estimate");
    sub->add_option("--c", o.c, "relaxation parameter")->required();
  }
  {
    auto* lt = group("lrtest", "LR cone tests");
    auto* sub = leaf(lt, "nonvanishing", "hive LP feasibility (rational entries allowed)", [&] {
      echo("alpha", o.alpha), echo("beta", o.beta), echo("lambda", o.lambda);
      if (o.side > 0) echo("side", o.side);
      const auto side = static_cast<std::size_t>(std::max(o.side, 0L));
      const auto a = rationals_arg("alpha", o.alpha), b = rationals_arg("beta", o.beta),
                 l = rationals_arg("lambda", o.lambda);
      result.outputs["value"] = ip::lr_nonvanishing(a, b, l, side);
    });
    partition_option(sub, "alpha", o.alpha);
    partition_option(sub, "beta", o.beta);
    partition_option(sub, "lambda", o.lambda);
    sub->add_option("--side", o.side, "hive side (default: largest length)");
  }
  {
    auto* sub = leaf(&app, "stretch", "stretching quasi-polynomial, generating function and positive form", [&] {
      multiplicity::StretchSpec spec;
      spec.kind = parse_kind(o.kind);
      echo("kind", std::string(multiplicity::stretch_kind_name(spec.kind)));
      auto need = [&](const std::string& name, const std::string& value) {
        if (value.empty()) throw UsageError(std::string(multiplicity::stretch_kind_name(spec.kind)) + " needs --" + name);
        echo(name, value);
        return partition_arg(name, value);
      };
      switch (spec.kind) {
        case multiplicity::StretchKind::LR:
          spec.labels = {need("alpha", o.alpha), need("beta", o.beta), need("lambda", o.lambda)};
          break;
        case multiplicity::StretchKind::Kronecker2Row:
        case multiplicity::StretchKind::Plethysm:
          spec.labels = {need("lambda", o.lambda), need("mu", o.mu), need("pi", o.pi)};
          break;
        case multiplicity::StretchKind::GpHilbert:
          spec.labels = {need("lambda", o.lambda)};
          [[fallthrough]];
        case multiplicity::StretchKind::SymInv:
          if (o.k < 1) throw UsageError("--k must be positive");
          spec.k = o.k;
          echo("k", o.k);
          break;
      }
      spec.horizon = o.n < 0 ? 6 : o.n;
      spec.period_bound = static_cast<std::size_t>(o.period_bound < 0 ? 2 : o.period_bound);
      spec.degree_bound = static_cast<std::size_t>(o.degree_bound < 0 ? 2 : o.degree_bound);
      spec.threads = std::max<std::size_t>(o.threads, 1);
      if (spec.kind == multiplicity::StretchKind::Plethysm) {
        spec.guard = o.guard < 0 ? multiplicity::kDefaultPlethysmGuard : o.guard;
        echo("guard", spec.guard);
      }
      echo("n", spec.horizon), echo("period_bound", spec.period_bound), echo("degree_bound", spec.degree_bound);
      result.outputs = stretch_json(multiplicity::stretching_quasipolynomial(spec));
    });
    sub->add_option("--kind", o.kind, "lr | kronecker2row | plethysm | syminv | gp_hilbert")->required();
    partition_option(sub, "alpha", o.alpha, false);
    partition_option(sub, "beta", o.beta, false);
    partition_option(sub, "lambda", o.lambda, false);
    partition_option(sub, "mu", o.mu, false);
    partition_option(sub, "pi", o.pi, false);
    sub->add_option("--k", o.k, "rank (syminv, gp_hilbert)");
    sub->add_option("--n", o.n, "sample horizon N (default 6)");
    sub->add_option("--period-bound", o.period_bound, "largest period tried (default 2)");
    sub->add_option("--degree-bound", o.degree_bound, "largest degree tried (default 2)");
    sub->add_option("--threads", o.threads, "sample threads");
    sub->add_option("--guard", o.guard, "plethysm: largest |n lambda||mu| accepted");
  }
  {
    auto* sub = leaf(&app, "posform", "positive form of a rational function", [&] {
      exact::RationalPolynomial num, den;
      if (!o.file.empty()) {
        echo("file", o.file);
        const json j = read_json_file(o.file);
        if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
          fail(ErrorCode::InvalidArgument, "malformed JSON: expected {\"num\": [...], \"den\": [...]}");
        }
        num = io::polynomial_from_json(j["num"]);
        den = io::polynomial_from_json(j["den"]);
      } else {
        if (o.num.empty() || o.den.empty()) throw UsageError("posform needs --num and --den, or --file");
        echo("num", o.num), echo("den", o.den);
        num = exact::RationalPolynomial(rationals_arg("num", o.num));
        den = exact::RationalPolynomial(rationals_arg("den", o.den));
      }
      if (o.degree < 0) throw UsageError("posform needs --degree");
      const long max_a = o.max_a > 0 ? o.max_a : 2;
      echo("degree", o.degree), echo("max_a", max_a);
      const auto form = quasipoly::positive_form_search(exact::RationalFunction(num, den),
                                                        static_cast<std::size_t>(o.degree),
                                                        static_cast<std::size_t>(max_a));
      result.outputs["positive_form"] = form ? io::positive_form_to_json(*form) : json(nullptr);
      if (form) result.outputs["text"] = positive_form_string(*form);
    });
    sub->add_option("--num", o.num, "numerator coefficients, ascending, comma-separated");
    sub->add_option("--den", o.den, "denominator coefficients, ascending, comma-separated");
    sub->add_option("--file", o.file, "JSON {\"num\": [...], \"den\": [...]}");
    sub->add_option("--degree", o.degree, "quasi-polynomial degree d (d + 1 denominator factors)");
    sub->add_option("--max-a", o.max_a, "largest a in a factor (1 - t^a) (default 2)");
  }
  {
    auto* hb = group("hilbert", "Hilbert functions");
    auto* gp = leaf(hb, "gp", "Hilbert polynomial of G/P_lambda for SL_k", [&] {
      echo("k", o.k), echo("lambda", o.lambda);
      if (o.k < 1) throw UsageError("--k must be positive");
      result.outputs["polynomial"] = io::polynomial_to_json(
          combinat::weyl_dim_poly(static_cast<std::size_t>(o.k), partition_arg("lambda", o.lambda)));
    });
    gp->add_option("--k", o.k, "rank")->required();
    partition_option(gp, "lambda", o.lambda);
    auto* sym = leaf(hb, "syminv", "Hilbert quasi-polynomial of C[x_1..x_k]^{S_k}", [&] {
      const long n = o.n < 0 ? 60 : o.n;
      echo("k", o.k), echo("n", n);
      result.outputs["quasi_polynomial"] = io::quasipolynomial_to_json(multiplicity::syminv_hilbert(o.k, n));
    });
    sym->add_option("--k", o.k, "number of variables")->required();
    sym->add_option("--n", o.n, "sample horizon (default 60)");
  }
  {
    auto* sub = leaf(&app, "snf", "Smith normal form D = U A V", [&] {
      exact::IntMatrix m;
      if (!o.file.empty()) {
        echo("file", o.file);
        m = io::int_matrix_from_json(read_json_file(o.file));
      } else {
        if (o.matrix.empty()) throw UsageError("snf needs --matrix or --file");
        echo("matrix", o.matrix);
        std::vector<std::vector<Integer>> rows;
        std::stringstream ss(o.matrix);
        std::string row;
        while (std::getline(ss, row, ';')) {
          std::vector<Integer> r;
          for (const auto& q : rationals_arg("matrix", row)) {
            if (!exact::is_integer(q)) throw UsageError("--matrix: entries must be integers");
            r.push_back(q.get_num());
          }
          if (!rows.empty() && r.size() != rows.front().size()) throw UsageError("--matrix: ragged rows");
          rows.push_back(std::move(r));
        }
        std::vector<Integer> entries;
        for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
        m = exact::IntMatrix(rows.size(), rows.empty() ? 0 : rows.front().size(), std::move(entries));
      }
      const exact::SmithDecomposition snf = exact::smith_normal_form(m);
      json diagonal = json::array();
      for (std::size_t i = 0; i < snf.rank; ++i) diagonal.push_back(integer_json(snf.D(i, i)));
      result.outputs = {{"U", io::int_matrix_to_json(snf.U)},
                        {"D", io::int_matrix_to_json(snf.D)},
                        {"V", io::int_matrix_to_json(snf.V)},
                        {"rank", snf.rank},
                        {"diagonal", diagonal}};
    });
    sub->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','");
    sub->add_option("--file", o.file, "matrix JSON (array of rows)");
  }
  {
    auto* sub = leaf(&app, "obstruct", "robust obstruction check for a pair (P, Q)", [&] {
      const auto p = read_polytope("p", o.p_file);
      const auto q = read_polytope("q", o.q_file);
      result.outputs["verdict"] = std::string(ip::obstruction_name(ip::robust_obstruction_check(p, q)));
    });
    sub->add_option("--p", o.p_file, "polytope P JSON")->required();
    sub->add_option("--q", o.q_file, "polytope Q JSON")->required();
  }
  {
    auto* rep = group("reproduce", "check the published tables");
    auto* kron = leaf(rep, "fkron1", "Kronecker stretching tables", [&] {
      const long n = o.n < 0 ? 6 : o.n;
      echo("n", n), echo("threads", o.threads);
      result.outputs = reproduce_kronecker(std::max<std::size_t>(o.threads, 1), n);
    });
    kron->add_option("--threads", o.threads, "sample threads");
    kron->add_option("--n", o.n, "sample horizon (default 6)");
    auto* sym = leaf(rep, "fsym", "symmetric-invariant Hilbert quasi-polynomials", [&] {
      const long n = o.n < 0 ? 60 : o.n;
      echo("n", n);
      result.outputs = reproduce_syminv(n);
    });
    sym->add_option("--n", o.n, "sample horizon (default 60)");
    leaf(rep, "fgmodp", "G/P Hilbert polynomials", [&] { result.outputs = reproduce_gp(); });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    if (action) action();
    result.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  out << render(result, as_csv ? Format::Csv : as_pretty ? Format::Pretty : Format::Json);
  return 0;
}

}  // namespace satip::cli
