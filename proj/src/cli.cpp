/*
 *   Copyright 2026 The heisrb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "heisrb/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <random>

#include "CLI11.hpp"

#include "heisrb/error.hpp"
#include "heisrb/json_io.hpp"
#include "heisrb/rbo_group.hpp"
#include "heisrb/selftest.hpp"

namespace heisrb::cli {

namespace {

using nlohmann::json;
namespace jio = heisrb::io;

struct Options {
    std::string family;
    std::vector<std::string> params;
    std::string matrix;
    std::string at;
    std::string aut;
    bool symbolic = false;
    int samples = 100;
    bool as_json = false;
    std::optional<std::uint64_t> seed;
};

class UsageError : public Error {
public:
    using Error::Error;
};

std::uint64_t resolve_seed(const Options &o)
{
    if (o.seed)
        return *o.seed;
    if (const char *env = std::getenv("HEISRB_SEED")) {
        char *end = nullptr;
        const auto value = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw UsageError(std::string("HEISRB_SEED must be a non-negative integer, got '") + env + "'");
        return value;
    }
    return 1;
}

std::map<std::string, Scalar> parse_params(const std::vector<std::string> &items)
{
    std::map<std::string, Scalar> params;
    for (const auto &item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("--param expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        if (params.contains(name))
            throw UsageError("--param " + name + " given twice");
        params.emplace(name, Scalar::parse(item.substr(eq + 1)));
    }
    return params;
}

/// The operator named on the command line, with its family tag when given as one.
struct OperatorInput {
    OperatorMatrix R;
    std::optional<FamilyTag> tag;
};

OperatorInput read_operator(const Options &o)
{
    if (!o.family.empty() && !o.matrix.empty())
        throw UsageError("give either --family or --matrix, not both");
    if (!o.family.empty()) {
        FamilyTag tag = complete_family(family_from_string(o.family), parse_params(o.params));
        return {make_family(tag), std::move(tag)};
    }
    if (!o.params.empty())
        throw UsageError("--param needs --family");
    if (o.matrix.empty())
        throw UsageError("an operator is required: --family NAME [--param k=v ...] or --matrix JSON");
    const json j = jio::parse(o.matrix);
    OperatorInput in{jio::decode_operator(j), std::nullopt};
    if (j.is_object() && j.contains("family"))
        in.tag = jio::decode_family(j);
    return in;
}

/// "(a,b,c)" with scalar expressions, split at top-level commas.
GroupElement parse_element(const std::string &text)
{
    std::string body = text;
    const auto first = body.find_first_not_of(" \t");
    const auto last = body.find_last_not_of(" \t");
    if (first == std::string::npos || body[first] != '(' || body[last] != ')')
        throw InputError("element must look like (a,b,c), got '" + text + "'");
    body = body.substr(first + 1, last - first - 1);
    std::vector<std::string> parts(1);
    int depth = 0;
    for (char ch : body) {
        depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
        if (ch == ',' && depth == 0)
            parts.emplace_back();
        else
            parts.back() += ch;
    }
    if (parts.size() != 3)
        throw InputError("element must have three coordinates, got '" + text + "'");
    return {Scalar::parse(parts[0]), Scalar::parse(parts[1]), Scalar::parse(parts[2])};
}

std::string describe(const FamilyTag &tag)
{
    std::string out = std::string(to_string(tag.family)) + " {";
    bool first = true;
    for (const auto &[name, value] : tag.params) {
        out += (first ? "" : ", ") + name + "=" + value.to_string();
        first = false;
    }
    out += "}";
    if (!tag.excluded.empty()) {
        out += " excluding";
        for (const auto &e : tag.excluded)
            out += " " + e.to_string() + "=0";
    }
    return out;
}

void print_operator(std::ostream &out, const OperatorInput &in)
{
    if (in.tag)
        out << "family: " << describe(*in.tag) << "\n";
    out << "operator:\n";
    for (int i = 1; i <= 3; ++i) {
        out << " ";
        for (int j = 1; j <= 3; ++j)
            out << "  r" << i << j << " = " << in.R.r(i, j).to_string();
        out << "\n";
    }
}

json operator_json(const OperatorInput &in)
{
    json j{{"operator", jio::encode(in.R)}};
    j["family"] = in.tag ? jio::encode(*in.tag) : json(nullptr);
    return j;
}

const char *status_word(bool pass) { return pass ? "pass" : "fail"; }

// ---------------------------------------------------------------------------

int verify_algebra(const Options &o, std::ostream &out)
{
    const OperatorInput in = read_operator(o);
    const RboVerdict verdict = is_rbo_weight1(in.R);
    if (o.as_json) {
        json j = operator_json(in);
        j["status"] = status_word(verdict.holds);
        j["witness"] = nullptr;
        if (verdict.witness)
            j["witness"] = {{"pair", verdict.witness->pair},
                            {"lhs", jio::encode(verdict.witness->lhs)},
                            {"rhs", jio::encode(verdict.witness->rhs)}};
        out << j.dump(2) << "\n";
    } else {
        print_operator(out, in);
        out << "weight-1 Rota-Baxter identity: " << status_word(verdict.holds) << "\n";
        if (verdict.witness)
            out << "witness on (" << verdict.witness->pair << "): [Rx,Ry] = " << to_string(verdict.witness->lhs)
                << ", R([Rx,y]+[x,Ry]+[x,y]) = " << to_string(verdict.witness->rhs) << "\n";
    }
    return verdict.holds ? kPass : kFail;
}

/// Substitutes random rationals for the free parameters of R.
OperatorMatrix specialise(const OperatorMatrix &R, std::mt19937_64 &rng, Assignment &chosen)
{
    std::set<std::string> names;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (const auto &n : R.r(i, j).variables())
                names.insert(n);
    std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 9);
    for (int attempt = 0; attempt < 100; ++attempt) {
        chosen.clear();
        for (const auto &n : names)
            chosen.emplace(n, Scalar(Rational(num(rng), den(rng))));
        try {
            return R.substitute(chosen);
        } catch (const DenominatorVanishes &) {
        }
    }
    throw Error("could not find parameter values away from the excluded locus");
}

int verify_group(const Options &o, std::ostream &out)
{
    const OperatorInput in = read_operator(o);
    const std::uint64_t seed = resolve_seed(o);
    const GroupOperator F = induce(in.R);

    GroupRboVerdict verdict;
    bool oracle = true;
    Assignment chosen;
    if (o.symbolic) {
        verdict = is_group_rbo(F.as_map());
        const auto g = GroupElement::symbolic("a", "b", "c");
        oracle = F(g) == induce_via_exp(in.R, g);
    } else {
        if (o.samples < 1)
            throw UsageError("--samples must be positive");
        std::mt19937_64 rng(seed);
        const OperatorMatrix numeric = specialise(in.R, rng, chosen);
        const GroupOperator Fn = induce(numeric);
        verdict = is_group_rbo_sampled(Fn.as_map(), o.samples, rng());
        std::mt19937_64 points(seed ^ 0x5bd1e995ULL);
        std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 9);
        for (int k = 0; k < o.samples && oracle; ++k) {
            const GroupElement g{Scalar(Rational(num(points), den(points))), Scalar(Rational(num(points), den(points))),
                                 Scalar(Rational(num(points), den(points)))};
            oracle = Fn(g) == induce_via_exp(numeric, g);
        }
    }
    const bool pass = verdict.holds && oracle;

    if (o.as_json) {
        json j = operator_json(in);
        j["status"] = status_word(pass);
        j["mode"] = o.symbolic ? "symbolic" : "sampled";
        if (!o.symbolic) {
            j["samples"] = o.samples;
            j["seed"] = seed;
            json params = json::object();
            for (const auto &[n, value] : chosen)
                params[n] = jio::encode(value);
            j["parameter_values"] = params;
        }
        j["group_identity"] = verdict.holds;
        j["matches_exp_route"] = oracle;
        j["witness"] = nullptr;
        if (verdict.witness) {
            const auto &w = *verdict.witness;
            j["witness"] = {{"g", jio::encode(w[2])},
                            {"h", jio::encode(w[3])},
                            {"lhs", jio::encode(w[0])},
                            {"rhs", jio::encode(w[1])}};
        }
        out << j.dump(2) << "\n";
    } else {
        print_operator(out, in);
        if (o.symbolic) {
            out << "mode: symbolic\n";
        } else {
            out << "mode: sampled, " << o.samples << " pairs, seed " << seed << "\n";
            if (!chosen.empty()) {
                out << "parameter values:";
                for (const auto &[n, value] : chosen)
                    out << " " << n << "=" << value.to_string();
                out << "\n";
            }
        }
        out << "group Rota-Baxter identity: " << status_word(verdict.holds) << "\n";
        out << "closed form agrees with the exp route: " << status_word(oracle) << "\n";
        if (verdict.witness) {
            const auto &w = *verdict.witness;
            out << "witness: g = " << to_string(w[2]) << ", h = " << to_string(w[3]) << ": F(g)F(h) = "
                << to_string(w[0]) << ", F(g F(g) h F(g)^-1) = " << to_string(w[1]) << "\n";
        }
        out << "result: " << status_word(pass) << "\n";
    }
    return pass ? kPass : kFail;
}

int induce_cmd(const Options &o, std::ostream &out)
{
    const OperatorInput in = read_operator(o);
    const GroupOperator F = induce(in.R);
    const GroupElement g = o.at.empty() ? GroupElement::symbolic("a", "b", "c") : parse_element(o.at);
    const GroupElement image = F(g);
    if (o.as_json) {
        json j = operator_json(in);
        j["status"] = "report";
        j["at"] = jio::encode(g);
        j["image"] = jio::encode(image);
        out << j.dump(2) << "\n";
    } else {
        out << to_string(image) << "\n";
    }
    return kPass;
}

int classify_cmd(const Options &o, std::ostream &out)
{
    const OperatorInput in = read_operator(o);
    if (!in.R.is_numeric())
        throw UsageError("classify needs numeric entries; fix every family parameter with --param");
    const Classification c = classify(in.R);
    if (o.as_json) {
        json j = jio::encode(c);
        j["status"] = "report";
        j["operator"] = jio::encode(in.R);
        out << j.dump(2) << "\n";
        return kPass;
    }
    out << "operator: " << to_string(in.R) << "\n";
    out << "R-family: " << describe(c.r_family) << "\n";
    if (c.p_family) {
        out << "P-family: " << describe(*c.p_family) << "\n";
        out << "Jordan block: " << to_string(c.jordan->note) << ", eigenvalues " << c.jordan->eigenvalues[0].to_string()
            << ", " << c.jordan->eigenvalues[1].to_string() << "\n";
        out << "automorphism to the canonical form: " << to_string(*c.to_canonical) << "\n";
    } else {
        out << "P-family: none (" << c.p_family_error << ")\n";
    }
    return kPass;
}

int brace_table(const Options &o, std::ostream &out)
{
    if (o.family.empty())
        throw UsageError("brace-table needs --family P1..P4");
    const Family f = family_from_string(o.family);
    if (f != Family::P1 && f != Family::P2 && f != Family::P3 && f != Family::P4)
        throw UsageError("brace-table covers P1..P4, not " + o.family);
    const FamilyTag tag = complete_family(f, parse_params(o.params));
    const Scalar q = theorem_main_table(tag);
    const std::string table = render_circle_table(q);
    const auto verdict = brace_check(descendant_brace(induce(make_family(tag))), resolve_seed(o));
    if (o.as_json) {
        json j{{"status", "report"}, {"family", jio::encode(tag)}, {"q", table}, {"q_canonical", jio::encode(q)}};
        j["circle"] = {{"a", "a1+a2"}, {"b", "b1+b2"}, {"c", jio::encode(q)}};
        j["brace_axioms"] = verdict.holds;
        out << j.dump(2) << "\n";
    } else {
        out << "family: " << describe(tag) << "\n";
        out << "q = " << table << "\n";
        out << "(a1,b1,c1) o (a2,b2,c2) = (a1+a2,b1+b2," << table << ")\n";
        out << "skew brace axioms: " << status_word(verdict.holds);
        if (!verdict.holds)
            out << " (" << verdict.failed << ")";
        out << "\n";
    }
    return kPass;
}

AlgebraAutomorphism random_automorphism(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<std::int64_t> num(-4, 4), den(1, 4);
    auto q = [&] { return Scalar(Rational(num(rng), den(rng))); };
    while (true) {
        try {
            return {q(), q(), q(), q(), q(), q()};
        } catch (const SingularAutomorphism &) {
        }
    }
}

int experiment(const Options &o, std::ostream &out)
{
    const OperatorInput in = read_operator(o);
    std::vector<AlgebraAutomorphism> automorphisms;
    if (!o.aut.empty()) {
        automorphisms.push_back(jio::decode_automorphism(jio::parse(o.aut)));
    } else {
        if (o.samples < 1)
            throw UsageError("--samples must be positive");
        std::mt19937_64 rng(resolve_seed(o));
        for (int k = 0; k < o.samples; ++k)
            automorphisms.push_back(random_automorphism(rng));
    }
    std::vector<TransferReport> reports;
    int transfers = 0;
    for (const auto &psi : automorphisms) {
        reports.push_back(equivalence_transfer_experiment(in.R, psi));
        transfers += reports.back().transfers ? 1 : 0;
    }

    if (o.as_json) {
        if (reports.size() == 1) {
            json j = jio::encode(reports[0]);
            j["status"] = "report";
            out << j.dump(2) << "\n";
        } else {
            json list = json::array();
            for (const auto &r : reports)
                list.push_back(jio::encode(r));
            out << json{{"status", "report"}, {"transfers", transfers}, {"total", reports.size()}, {"experiments", list}}
                       .dump(2)
                << "\n";
        }
        return kPass;
    }
    print_operator(out, in);
    for (const auto &r : reports) {
        out << "psi = " << to_string(r.automorphism) << ": " << (r.transfers ? "transfers" : "does not transfer");
        if (r.witness)
            out << ", differences (" << (*r.witness)[0].to_string() << ", " << (*r.witness)[1].to_string() << ", "
                << (*r.witness)[2].to_string() << ")";
        out << "\n";
    }
    out << transfers << "/" << reports.size() << " automorphisms transfer the induced operator\n";
    return kPass;
}

int selftest(const Options &o, std::ostream &out)
{
    const std::uint64_t seed = resolve_seed(o);
    json list = json::array();
    int failed = 0;
    run_selftest(seed, [&](const CheckResult &r) {
        failed += r.passed ? 0 : 1;
        if (o.as_json) {
            list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            return;
        }
        out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  (" << std::fixed
            << std::setprecision(2) << r.seconds << " s)";
        if (!r.detail.empty())
            out << "  " << r.detail;
        out << std::endl;
    });
    if (o.as_json)
        out << json{{"status", status_word(failed == 0)}, {"seed", seed}, {"checks", list}}.dump(2) << "\n";
    else
        out << (failed == 0 ? "selftest passed" : "selftest failed: " + std::to_string(failed) + " checks") << "\n";
    return failed == 0 ? kPass : kFail;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Rota-Baxter operators on the Heisenberg Lie algebra and group", "heisrb"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--seed", o.seed, "seed for sampling (default: HEISRB_SEED, then 1)");
        sub->add_flag("--json", o.as_json, "machine-readable output");
    };
    auto add_operator = [&](CLI::App *sub) {
        sub->add_option("--family", o.family, "R1..R4 or P1..P4");
        sub->add_option("--param", o.params, "family parameter name=value, repeatable; value may be symbolic")
            ->allow_extra_args(false);
        sub->add_option("--matrix", o.matrix, "operator as JSON: 3x3 array, {\"r\": ...} or a family object");
    };

    struct Verb {
        const char *name;
        const char *help;
        int (*body)(const Options &, std::ostream &);
    };
    const Verb verbs[] = {
        {"verify-algebra", "check the weight-1 Rota-Baxter identity on the algebra", verify_algebra},
        {"verify-group", "check the induced group operator", verify_group},
        {"induce", "evaluate the induced group operator", induce_cmd},
        {"classify", "R-family and Jordan canonical P-family of a numeric operator", classify_cmd},
        {"brace-table", "circle law of the descendant group for P1..P4", brace_table},
        {"experiment", "does conjugating R by an automorphism conjugate the induced operator?", experiment},
        {"selftest", "run every invariant check", selftest},
    };
    int (*chosen)(const Options &, std::ostream &) = nullptr;
    for (const auto &verb : verbs) {
        CLI::App *sub = app.add_subcommand(verb.name, verb.help);
        add_common(sub);
        if (std::string_view(verb.name) != "selftest")
            add_operator(sub);
        if (std::string_view(verb.name) == "induce")
            sub->add_option("--at", o.at, "group element (a,b,c); generic if omitted");
        if (std::string_view(verb.name) == "verify-group")
            sub->add_flag("--symbolic", o.symbolic, "prove the identity symbolically instead of sampling");
        if (std::string_view(verb.name) == "verify-group" || std::string_view(verb.name) == "experiment")
            sub->add_option("--samples", o.samples, "number of random samples (default 100)");
        if (std::string_view(verb.name) == "experiment")
            sub->add_option("--aut", o.aut, "automorphism as JSON [[m11,m12,m13],[m21,m22,m23]]; random if omitted");
        sub->callback([&chosen, body = verb.body] { chosen = body; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError &e) {
        err << "heisrb: " << e.what() << "\n";
        if (e.get_name() == "RequiredError" && app.get_subcommands().empty())
            err << app.help();
        return kUsage;
    }

    try {
        return chosen(o, out);
    } catch (const UsageError &e) {
        err << "heisrb: " << e.what() << "\n";
        return kUsage;
    } catch (const InputError &e) {
        err << "heisrb: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError &e) {
        err << "heisrb: " << e.what() << "\n";
        return kUsage;
    } catch (const Error &e) {
        if (o.as_json)
            out << json{{"status", "fail"}, {"error", e.what()}}.dump(2) << "\n";
        err << "heisrb: " << e.what() << "\n";
        return kFail;
    }
}

} // namespace heisrb::cli
