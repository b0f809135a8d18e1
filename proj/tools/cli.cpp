#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "isoconj/error.hpp"
#include "isoconj/io.hpp"
#include "isoconj/oracle.hpp"
#include "isoconj/tower.hpp"

namespace isoconj::cli {

namespace {

struct Outcome {
  Json result;
  Level level;
};

ProblemFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "$: cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

void emit(std::ostream& out, const std::string& command, const Json& result, const Json& level, const Json* error) {
  Json doc;
  doc["command"] = command;
  doc["result"] = result;
  doc["level"] = level;
  if (error) doc["error"] = *error;
  out << doc.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Conjugacy of isometries of symmetric and symplectic forms over finite-field towers", "isoconj"};
  app.require_subcommand(1);

  std::string problem_path, op_name = "T", s_name = "S", t_name = "T";
  std::size_t m = 0, degree = 1, oracle_degree = 2;
  std::uint64_t p = 0;
  std::function<Outcome()> action;

  auto add_problem = [&](CLI::App* sub) {
    sub->add_option("--problem", problem_path, "problem file (JSON)")->required()->check(CLI::ExistingFile);
  };
  auto single = [&](const char* name, const char* help, std::function<Outcome(const ProblemFile&, const Matrix&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_problem(sub);
    sub->add_option("--op", op_name, "operator name")->capture_default_str();
    sub->callback([&, fn] {
      action = [&, fn] {
        const ProblemFile pf = load(problem_path);
        return fn(pf, pf.op(op_name));
      };
    });
  };
  auto pair = [&](const char* name, const char* help,
                  std::function<Outcome(const ProblemFile&, const Matrix&, const Matrix&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_problem(sub);
    sub->add_option("--S", s_name, "first operator name")->capture_default_str();
    sub->add_option("--T", t_name, "second operator name")->capture_default_str();
    sub->callback([&, fn] {
      action = [&, fn] {
        const ProblemFile pf = load(problem_path);
        return fn(pf, pf.op(s_name), pf.op(t_name));
      };
    });
    return sub;
  };

  single("check", "isometry membership", [](const ProblemFile& pf, const Matrix& t) {
    return Outcome{{{"isometry", is_isometry(t, pf.space)}}, pf.level};
  });
  single("eldiv", "elementary divisors", [](const ProblemFile&, const Matrix& t) {
    const auto d = elementary_divisors(t);
    return Outcome{to_json(d), d.level};
  });
  single("primary", "primary decomposition", [](const ProblemFile& pf, const Matrix& t) {
    const auto pd = primary_decomposition(t, pf.space);
    return Outcome{to_json(pd), pd.level};
  });
  single("jordan", "multiplicative Jordan decomposition", [](const ProblemFile& pf, const Matrix& t) {
    const auto jp = multiplicative_jordan(t, pf.space);
    return Outcome{to_json(jp), jp.semisimple.level()};
  });
  single("jm", "sl2-triple through the logarithm of a unipotent isometry", [](const ProblemFile& pf, const Matrix& t) {
    require_characteristic_gate(pf.space);
    require_isometry(t, pf.space);
    if (!is_unipotent(t)) throw Error(ErrorCode::NotUnipotent, "operator is not unipotent");
    const auto triple = sl2_triple(unipotent_log(t), pf.space);
    Json summands = Json::array();
    for (const auto& s : sl2_irreducible_decomposition(triple)) summands.push_back(to_json(s));
    Json r = to_json(triple);
    r["summands"] = std::move(summands);
    return Outcome{std::move(r), triple.e.level()};
  });
  single("unidec", "orthogonal decomposition of a unipotent isometry", [](const ProblemFile& pf, const Matrix& t) {
    const auto d = unipotent_orthogonal_decomposition(t, pf.space);
    return Outcome{to_json(d), d.triple.e.level()};
  });
  pair("conj", "conjugacy verdict and witness", [](const ProblemFile& pf, const Matrix& s, const Matrix& t) {
    const auto v = isometry_conjugacy(s, t, pf.space);
    return Outcome{to_json(v), v.level};
  });
  CLI::App* oracle = pair("oracle", "brute-force conjugator search",
                          [&](const ProblemFile& pf, const Matrix& s, const Matrix& t) {
                            const Level l = extend(pf.level, oracle_degree);
                            const auto x = brute_force_conjugate(s, t, pf.space, l);
                            Json r{{"found", x.has_value()}};
                            if (x) r["witness"] = to_json(*x);
                            return Outcome{std::move(r), l};
                          });
  oracle->add_option("--degree", oracle_degree, "search over the extension of this degree")
      ->capture_default_str()
      ->check(CLI::Range(1, 4));

  CLI::App* symform = app.add_subcommand("symform", "Gram matrix of the invariant form on Sym^m");
  symform->add_option("m", m, "symmetric power")->required();
  symform->add_option("--p", p, "characteristic")->required();
  symform->add_option("--degree", degree, "extension degree")->capture_default_str()->check(CLI::Range(1, 16));
  symform->callback([&] {
    action = [&] {
      const Level l = extend(make_prime_field(p), degree);
      const auto b = sym_power_form(m, l);
      return Outcome{{{"kind", std::string(to_string(b.kind()))}, {"gram", to_json(b.gram())}}, l};
    };
  });

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
    const Json err{{"code", "UsageError"}, {"message", e.what()}};
    emit(out, args.empty() ? "" : args.front(), nullptr, nullptr, &err);
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Outcome o = action();
    emit(out, command, o.result, to_json(o.level), nullptr);
    return 0;
  } catch (const Error& e) {
    const Json err{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    emit(out, command, nullptr, nullptr, &err);
    return 2;
  }
}

}  // namespace isoconj::cli
