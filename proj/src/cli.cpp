#include "braidrep/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "braidrep/error.hpp"
#include "braidrep/freegrp.hpp"
#include "braidrep/graded.hpp"
#include "braidrep/reps.hpp"
#include "braidrep/serialize.hpp"
#include "braidrep/symchar.hpp"

namespace braidrep::cli {

namespace {

struct RepOptions {
    std::string family = "rho";
    int n = 3;
    std::string alpha;
    std::string beta;
    bool symbolic = false;
    std::string word;
    std::string out = "json";
    std::string basis = "standard";
};

const std::vector<std::string> kFamilies{"rho", "mu", "burau", "lkb"};

bool two_parameter(const std::string& family) { return family == "mu" || family == "lkb"; }

SymbolicRep symbolic_family(const std::string& family, int n)
{
    if (family == "rho") {
        return rho_symbolic(n);
    }
    if (family == "mu") {
        return mu_symbolic(n);
    }
    if (family == "burau") {
        return burau_rep(n);
    }
    return lkb_rep(n);
}

RationalRep numeric_family(const std::string& family, int n, const Rational& alpha, const Rational& beta)
{
    if (family == "rho") {
        return rho_at(n, alpha);
    }
    if (family == "mu") {
        return mu_at(n, alpha, beta);
    }
    const std::vector<Rational> point =
        family == "burau" ? std::vector<Rational>{alpha} : std::vector<Rational>{alpha, beta};
    return specialize(family == "burau" ? burau_rep(n) : lkb_rep(n), point);
}

void check_tuba_wenzl(const RepOptions& o)
{
    if (o.basis == "tuba-wenzl" && (o.family != "rho" || o.n != 3)) {
        throw CLI::ValidationError("--basis", "tuba-wenzl is only defined for rho with --n 3");
    }
}

// Numeric when --alpha is given, otherwise symbolic.
bool wants_numeric(const RepOptions& o)
{
    if (o.symbolic && !o.alpha.empty()) {
        throw CLI::ValidationError("--symbolic", "cannot be combined with --alpha");
    }
    if (o.alpha.empty()) {
        if (!o.beta.empty()) {
            throw CLI::ValidationError("--beta", "requires --alpha");
        }
        return false;
    }
    if (two_parameter(o.family) && o.beta.empty()) {
        throw CLI::ValidationError("--beta", "required for " + o.family + " with --alpha");
    }
    if (!two_parameter(o.family) && !o.beta.empty()) {
        throw CLI::ValidationError("--beta", "not used by " + o.family);
    }
    return true;
}

Json word_json(const BraidWord& w)
{
    Json out = Json::array();
    for (const auto& l : w.letters()) {
        out.push_back(Json::array({l.index, l.exponent}));
    }
    return out;
}

Json subspace_json(const ProjectiveSubspace& s)
{
    Json basis = Json::array();
    for (const auto& v : s.basis()) {
        Json row = Json::array();
        for (const auto& x : v) {
            row.push_back(rational_to_string(x));
        }
        basis.push_back(std::move(row));
    }
    return Json{{"dim", s.dim()}, {"basis", std::move(basis)}};
}

Json roots_json(const std::vector<RootMultiplicity>& roots)
{
    Json out = Json::array();
    for (const auto& r : roots) {
        out.push_back(Json{{"root", rational_to_string(r.root)}, {"multiplicity", r.multiplicity}});
    }
    return out;
}

Json character_json(const CharacterVector& chi)
{
    Json out = Json::object();
    for (const auto& lambda : partitions(chi.n)) {
        out[partition_key(lambda)] = chi.at(lambda);
    }
    return out;
}

Json decomposition_json(const std::vector<std::pair<std::string, long long>>& mults)
{
    Json out = Json::array();
    for (const auto& [name, m] : mults) {
        if (m != 0) {
            out.push_back(Json{{"name", name}, {"multiplicity", m}});
        }
    }
    return out;
}

CharacterVector degenerate_character(const std::string& family, int n)
{
    if (family == "rho") {
        return rep_character(rho_at(n, Rational(1)));
    }
    if (family == "mu") {
        return rep_character(mu_at(n, Rational(1), Rational(1)));
    }
    throw DomainError("characters are defined for rho and mu only");
}

CharacterVector character_from_json(int n, const std::string& text)
{
    const Json j = Json::parse(text);
    if (!j.is_object()) {
        throw DomainError("character JSON must map partition strings to integers");
    }
    CharacterVector chi;
    chi.n = n;
    for (const auto& lambda : partitions(n)) {
        const std::string key = partition_key(lambda);
        if (!j.contains(key)) {
            throw DomainError("character JSON lacks class " + key);
        }
        chi.values[lambda] = j.at(key).get<long long>();
    }
    if (j.size() != chi.values.size()) {
        throw DomainError("character JSON has classes that are not partitions of " + std::to_string(n));
    }
    return chi;
}

void print_rep(const RepOptions& o, std::ostream& out)
{
    check_tuba_wenzl(o);
    if (o.out != "json" && o.out != "latex") {
        throw CLI::ValidationError("--out", "must be json or latex");
    }
    const BraidWord w = parse_word_arg(o.n, o.word);
    Json meta{{"rep", o.family}, {"n", o.n}, {"word", word_json(w)}, {"basis", o.basis}};
    if (wants_numeric(o)) {
        const Rational alpha = parse_rational(o.alpha);
        const Rational beta = o.beta.empty() ? Rational(1) : parse_rational(o.beta);
        RationalRep rep = numeric_family(o.family, o.n, alpha, beta);
        if (o.basis == "tuba-wenzl") {
            rep = change_basis(rep, tuba_wenzl_basis_at(alpha));
        }
        const Matrix<Rational> m = rep.eval_word(w);
        if (o.out == "latex") {
            out << to_latex(m) << "\n";
            return;
        }
        meta["alpha"] = rational_to_string(alpha);
        if (two_parameter(o.family)) {
            meta["beta"] = rational_to_string(beta);
        }
        meta["matrix"] = to_json(m);
    } else {
        SymbolicRep rep = symbolic_family(o.family, o.n);
        if (o.basis == "tuba-wenzl") {
            rep = change_basis(rep, tuba_wenzl_basis_symbolic());
        }
        const Matrix<LaurentPoly> m = rep.eval_word(w);
        if (o.out == "latex") {
            out << to_latex(m, rep.var_names) << "\n";
            return;
        }
        meta["variables"] = rep.var_names;
        meta["matrix"] = to_json(m);
    }
    out << meta.dump() << "\n";
}

} // namespace

BraidWord parse_word_arg(int strands, const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\n");
    if (first == std::string::npos || text[first] != '[') {
        return BraidWord::parse(strands, text);
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed JSON word: ") + e.what());
    }
    std::vector<Letter> letters;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
            throw DomainError("JSON word letters must be [index, exponent] pairs");
        }
        letters.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return BraidWord(strands, std::move(letters));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact braid-group representations: Burau, LKB and their adjoint actions"};
    app.require_subcommand(1);

    RepOptions rep_opts;
    auto* rep_cmd = app.add_subcommand("rep", "Matrix of a braid word");
    rep_cmd->add_option("family", rep_opts.family, "rho | mu | burau | lkb")
        ->required()
        ->check(CLI::IsMember(kFamilies));
    rep_cmd->add_option("--n", rep_opts.n, "Number of strands")->required();
    rep_cmd->add_option("--alpha", rep_opts.alpha, "Rational value P/Q of the first parameter");
    rep_cmd->add_option("--beta", rep_opts.beta, "Rational value P/Q of the second parameter");
    rep_cmd->add_flag("--symbolic", rep_opts.symbolic, "Laurent polynomial entries (default without --alpha)");
    rep_cmd->add_option("--word", rep_opts.word, "Signed generator indices, e.g. \"3 -1\"");
    rep_cmd->add_option("--out", rep_opts.out, "json | latex")->check(CLI::IsMember({"json", "latex"}));
    rep_cmd->add_option("--basis", rep_opts.basis, "standard | tuba-wenzl")
        ->check(CLI::IsMember({"standard", "tuba-wenzl"}));

    std::string char_family = "rho";
    int char_n = 3;
    bool char_decompose = false;
    auto* char_cmd = app.add_subcommand("char", "Character at the degenerate point, keyed by cycle type");
    char_cmd->add_option("--rep", char_family, "rho | mu")->check(CLI::IsMember({"rho", "mu"}));
    char_cmd->add_option("--n", char_n, "Number of strands")->required();
    char_cmd->add_flag("--decompose", char_decompose, "Also decompose into irreducibles");

    std::string dec_family;
    std::string dec_char;
    int dec_n = 3;
    auto* dec_cmd = app.add_subcommand("decompose", "Multiplicities of irreducible constituents");
    dec_cmd->add_option("--n", dec_n, "Symmetric group degree")->required();
    auto* dec_rep_opt = dec_cmd->add_option("--rep", dec_family, "rho | mu")->check(CLI::IsMember({"rho", "mu"}));
    auto* dec_char_opt = dec_cmd->add_option("--char", dec_char, "Character as JSON keyed by cycle type");
    dec_rep_opt->excludes(dec_char_opt);

    RepOptions ver_opts;
    auto* ver_cmd = app.add_subcommand("verify", "Check braid relations exactly");
    ver_cmd->add_option("--rep", ver_opts.family, "rho | mu | burau | lkb")->check(CLI::IsMember(kFamilies));
    ver_cmd->add_option("--n", ver_opts.n, "Number of strands")->required();
    ver_cmd->add_option("--alpha", ver_opts.alpha, "Rational value of the first parameter");
    ver_cmd->add_option("--beta", ver_opts.beta, "Rational value of the second parameter");
    ver_cmd->add_flag("--symbolic", ver_opts.symbolic, "Symbolic check (default without --alpha)");

    std::string cong_family = "rho";
    int cong_n = 3;
    int cong_cap = 8;
    std::optional<std::string> cong_word;
    auto* cong_cmd = app.add_subcommand("congruence", "Congruence level modulo (a-1) or (a-1, b-1)");
    cong_cmd->add_option("--rep", cong_family, "rho | mu")->check(CLI::IsMember({"rho", "mu"}));
    cong_cmd->add_option("--n", cong_n, "Number of strands")->required();
    cong_cmd->add_option("--word", cong_word, "Word to test; default: every pure braid generator");
    cong_cmd->add_option("--cap", cong_cap, "Largest level tested")->check(CLI::PositiveNumber);

    int pp_n = 4;
    std::string pp_alpha;
    std::string pp_x = "3 -1";
    std::string pp_y = "2 3 -1 -2";
    auto* pp_cmd = app.add_subcommand("pingpong", "Ping-pong certificate for rho_n(alpha)");
    pp_cmd->add_option("--n", pp_n, "Number of strands");
    pp_cmd->add_option("--alpha", pp_alpha, "Rational alpha with |alpha| > 1")->required();
    pp_cmd->add_option("--word-x", pp_x, "Word for X");
    pp_cmd->add_option("--word-y", pp_y, "Word for Y");

    auto* graded_cmd = app.add_subcommand("graded", "Mod-2^i filtration of rho_n(-1)");
    graded_cmd->require_subcommand(1);
    int gs_n = 3;
    int gs_depth = 2;
    int gs_budget = 50;
    int gs_cap = 16;
    auto* gs_cmd = graded_cmd->add_subcommand("search", "Iterated commutators of pure braid generators");
    gs_cmd->add_option("--n", gs_n, "Number of strands")->required();
    gs_cmd->add_option("--depth", gs_depth, "Largest formal depth")->check(CLI::PositiveNumber);
    gs_cmd->add_option("--budget", gs_budget, "Largest number of records")->check(CLI::NonNegativeNumber);
    gs_cmd->add_option("--cap", gs_cap, "Largest two-adic level tested")->check(CLI::PositiveNumber);
    int gi_n = 3;
    int gi_level = 1;
    std::string gi_word;
    auto* gi_cmd = graded_cmd->add_subcommand("image", "Graded image of a word at a level");
    gi_cmd->add_option("--n", gi_n, "Number of strands")->required();
    gi_cmd->add_option("--word", gi_word, "Pure braid word")->required();
    gi_cmd->add_option("--level", gi_level, "Filtration level i")->check(CLI::PositiveNumber);

    int k_n = 4;
    int k_depth = 10;
    auto* kohno_cmd = app.add_subcommand("kohno", "Ranks of the lower central series quotients of P_n");
    kohno_cmd->add_option("--n", k_n, "Number of strands")->required();
    kohno_cmd->add_option("--depth", k_depth, "Number of ranks")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageFailure;
    }

    try {
        if (*rep_cmd) {
            print_rep(rep_opts, out);
        } else if (*char_cmd) {
            const CharacterVector chi = degenerate_character(char_family, char_n);
            Json j{{"rep", char_family}, {"n", char_n}, {"character", character_json(chi)}};
            if (char_decompose) {
                j["decomposition"] = decomposition_json(decompose(chi, standard_constituents(char_n)));
            }
            out << j.dump() << "\n";
        } else if (*dec_cmd) {
            if (dec_family.empty() && dec_char.empty()) {
                throw CLI::ValidationError("decompose", "needs --rep or --char");
            }
            const CharacterVector chi =
                dec_family.empty() ? character_from_json(dec_n, dec_char) : degenerate_character(dec_family, dec_n);
            Json j{{"n", dec_n}, {"decomposition", decomposition_json(decompose(chi, standard_constituents(dec_n)))}};
            out << j.dump() << "\n";
        } else if (*ver_cmd) {
            bool ok = false;
            if (wants_numeric(ver_opts)) {
                const Rational alpha = parse_rational(ver_opts.alpha);
                const Rational beta = ver_opts.beta.empty() ? Rational(1) : parse_rational(ver_opts.beta);
                ok = numeric_family(ver_opts.family, ver_opts.n, alpha, beta).verify_relations();
            } else {
                ok = symbolic_family(ver_opts.family, ver_opts.n).verify_relations();
            }
            out << Json{{"rep", ver_opts.family}, {"n", ver_opts.n}, {"relations", ok}}.dump() << "\n";
            if (!ok) {
                err << "braid relations fail\n";
                return DomainFailure;
            }
        } else if (*cong_cmd) {
            const bool mu = cong_family == "mu";
            const SymbolicRep rep = mu ? mu_symbolic(cong_n) : rho_symbolic(cong_n);
            const IdealSpec ideal = mu ? IdealSpec::pair(1, 1) : IdealSpec::single(0, 1);
            std::vector<std::pair<std::string, BraidWord>> words;
            if (cong_word) {
                words.emplace_back(*cong_word, parse_word_arg(cong_n, *cong_word));
            } else {
                for (int i = 1; i < cong_n; ++i) {
                    for (int j = i + 1; j <= cong_n; ++j) {
                        words.emplace_back("B" + std::to_string(i) + std::to_string(j), pure_gen(i, j, cong_n));
                    }
                }
            }
            Json results = Json::array();
            for (const auto& [label, w] : words) {
                const CongruenceReport r = congruence_level(rep.eval_word(w), ideal, cong_cap);
                results.push_back(Json{{"label", label}, {"word", word_json(w)}, {"level", r.level}});
            }
            out << Json{{"rep", cong_family},
                        {"n", cong_n},
                        {"ideal", mu ? "(a-1, b-1)" : "(a-1)"},
                        {"cap", cong_cap},
                        {"results", std::move(results)}}
                       .dump()
                << "\n";
        } else if (*pp_cmd) {
            const Rational alpha = parse_rational(pp_alpha);
            const RationalRep rep = rho_at(pp_n, alpha);
            const Matrix<Rational> x = rep.eval_word(parse_word_arg(pp_n, pp_x));
            const Matrix<Rational> y = rep.eval_word(parse_word_arg(pp_n, pp_y));
            const PingPongReport report = certify(x, y);
            const SlBasis basis = SlBasis::standard(pp_n - 1);
            Json labels = Json::array();
            for (std::size_t i = 0; i < basis.size(); ++i) {
                labels.push_back(basis.label_name(i));
            }
            Json witnesses = Json::array();
            const char* names[] = {"X", "X^-1", "Y", "Y^-1"};
            for (std::size_t i = 0; i < 4; ++i) {
                witnesses.push_back(Json{{"matrix", names[i]},
                                         {"f1", poly_to_string(report.splits[i].f1)},
                                         {"f2", poly_to_string(report.splits[i].f2)},
                                         {"spectrum", roots_json(report.splits[i].spectrum)},
                                         {"attracting", subspace_json(report.witnesses[i].attract)},
                                         {"repelling", subspace_json(report.witnesses[i].repel)}});
            }
            Json j{{"n", pp_n},
                   {"alpha", rational_to_string(alpha)},
                   {"basis", std::move(labels)},
                   {"certified", report.certified()},
                   {"points_ok", report.points_ok},
                   {"cond2_ok", report.cond2_ok},
                   {"cond3_ok", report.cond3_ok},
                   {"witnesses", std::move(witnesses)}};
            if (report.points_ok) {
                const RemarkDistances d = remark_distance(x, y);
                j["remark"] = Json{{"convention", "exploratory: unit Euclidean representatives, no renormalization"},
                                   {"Yv1_minus_v2_sq", d.first.to_string()},
                                   {"Yv1_minus_v2_sq_ge_1", d.first.compare(1) >= 0},
                                   {"Y2v1_minus_v2_sq", d.second.to_string()},
                                   {"Y2v1_minus_v2_sq_ge_1", d.second.compare(1) >= 0}};
            }
            out << j.dump() << "\n";
        } else if (*gs_cmd) {
            for (const auto& c : kernel_search(gs_n, gs_depth, gs_budget, gs_cap)) {
                out << Json{{"expression", c.expression},
                            {"word", c.word.to_string()},
                            {"depth", c.depth},
                            {"level", c.level},
                            {"gr_vanishing", c.gr_vanishing},
                            {"burau_trivial", c.burau_trivial},
                            {"kernel_hit", c.burau_trivial && !c.word.letters().empty()}}
                           .dump()
                    << "\n";
            }
        } else if (*gi_cmd) {
            const BraidWord w = parse_word_arg(gi_n, gi_word);
            const GradedImage g = gr_image(rho_minus_one(gi_n).eval_word(w), gi_level);
            Json rows = Json::array();
            for (std::size_t r = 0; r < g.matrix.rows(); ++r) {
                Json row = Json::array();
                for (std::size_t c = 0; c < g.matrix.cols(); ++c) {
                    row.push_back(static_cast<int>(g.matrix(r, c)));
                }
                rows.push_back(std::move(row));
            }
            out << Json{{"n", gi_n},
                        {"level", g.level},
                        {"image", g.matrix.support_string()},
                        {"matrix", std::move(rows)}}
                       .dump()
                << "\n";
        } else if (*kohno_cmd) {
            Json ranks = Json::array();
            for (const auto& r : kohno_ranks(k_n, k_depth)) {
                ranks.push_back(r.get_str());
            }
            Json j{{"n", k_n}, {"ranks", std::move(ranks)}};
            if (k_n >= 3) {
                const Integer bound = Integer(k_n * (k_n - 2)) * Integer(k_n * (k_n - 2)) - 1;
                j["threshold"] = Json{{"bound", bound.get_str()}, {"index", kohno_threshold(k_n, bound)}};
            }
            out << j.dump() << "\n";
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageFailure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return DomainFailure;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return DomainFailure;
    }
    return Ok;
}

} // namespace braidrep::cli
