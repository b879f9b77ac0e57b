#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "periplectiq/driver.hpp"

namespace {

using njson = nlohmann::ordered_json;
using periplectiq::ComposeOrder;

struct CommonOpts {
    int n = 2;
    int k = 2;
    std::string format = "json";
    std::string out;
    std::string convention = "rl";
};

void add_common(CLI::App* cmd, CommonOpts& o, int kmin, int kmax) {
    cmd->add_option("--n", o.n, "rank n of the superalgebra")
        ->check(CLI::Range(2, 4))
        ->required();
    cmd->add_option("--k", o.k, "tensor power k")->check(CLI::Range(kmin, kmax))->required();
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
    cmd->add_option("--convention", o.convention,
                    "permutation composition order for conjugated contractions")
        ->check(CLI::IsMember({"rl", "lr"}));
}

std::string render_text(const njson& j) {
    std::ostringstream os;
    const std::string cmd = j.at("command");
    os << cmd << " n=" << j.at("n") << " k=" << j.at("k") << "\n";
    if (cmd == "relations") {
        for (const auto& s : j.at("suites")) {
            os << "  " << s.at("suite").get<std::string>() << ": " << s.at("passed")
               << " passed, " << s.at("failed") << " failed";
            int ambiguous = 0;
            for (const auto& c : s.at("cases"))
                if (c.at("status") == "ambiguous") ++ambiguous;
            if (ambiguous) os << " (" << ambiguous << " pass in one documented reading)";
            os << "\n";
            for (const auto& c : s.at("cases"))
                if (c.at("status") == "fail")
                    os << "    FAIL " << c.at("id").get<std::string>() << "\n";
                else if (c.at("status") == "ambiguous")
                    os << "    note " << c.at("id").get<std::string>() << ": "
                       << c.at("reading").get<std::string>() << "\n";
            if (s.contains("notes"))
                for (const auto& [key, v] : s.at("notes").items())
                    os << "    " << key << ": " << v.get<std::string>() << "\n";
        }
    } else if (cmd == "maximal") {
        if (j.contains("profile")) {
            os << "  maximal-vector profile (dim " << j.at("total") << "):\n";
            for (const auto& p : j.at("profile"))
                os << "    weight " << p.at("weight").dump() << " x " << p.at("multiplicity")
                   << "\n";
            const auto& c = j.at("candidates");
            os << "  candidates: " << c.at("count") << ", all maximal: " << c.at("all_maximal")
               << ", independent: " << c.at("independent") << ", span " << c.at("span_dimension")
               << " of " << c.at("kernel_dimension") << "\n";
            if (j.contains("note")) os << "  note: " << j.at("note").get<std::string>() << "\n";
        }
        if (j.contains("candidate"))
            os << "  candidate " << j.at("candidate").at("tableau").dump() << " "
               << j.at("candidate").at("pattern").dump() << " maximal: "
               << j.at("candidate").at("maximal").dump() << "\n";
    } else if (cmd == "decompose") {
        const auto& cert = j.at("certificate");
        os << "  certificate: ranks " << cert.at("ranks").dump() << " sum to " << cert.at("dim")
           << ", pass: " << cert.at("pass").dump() << "\n";
        for (const auto& s : j.at("summands")) {
            os << "  " << s.at("summand").get<std::string>() << ": rank " << s.at("rank")
               << ", verdict " << s.at("verdict").get<std::string>() << "\n";
            for (const auto& w : s.at("witnesses"))
                os << "      " << w.get<std::string>() << "\n";
        }
        if (j.contains("identities")) os << "  identities: " << j.at("identities").dump() << "\n";
    } else if (cmd == "character") {
        for (const auto& e : j.at("entries"))
            os << "  weight " << e.at("weight").dump() << " multiplicity "
               << e.at("multiplicity") << "\n";
    }
    os << "  all_pass: " << (j.at("all_pass").get<bool>() ? "true" : "false") << "\n";
    return os.str();
}

int emit(const periplectiq::DriveResult& r, const CommonOpts& o) {
    std::string payload = r.json;
    if (o.format == "text") payload = render_text(njson::parse(r.json));
    if (o.out.empty()) {
        std::cout << payload << "\n";
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "cannot write " << o.out << "\n";
            return 2;
        }
        f << payload << "\n";
    }
    return r.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suites for the quantized periplectic superalgebra"};
    app.require_subcommand(1);

    CommonOpts rel_o, max_o, dec_o, chr_o;
    bool mutate = false;
    std::string tableau_arg, pattern_arg;

    CLI::App* rel = app.add_subcommand("relations", "relation and identity sweeps");
    add_common(rel, rel_o, 1, 3);
    rel->add_flag("--mutate", mutate, "run the negative controls (expected to fail)");

    CLI::App* max = app.add_subcommand("maximal", "maximal vectors and theorem candidates");
    add_common(max, max_o, 1, 4);
    max->add_option("--tableau", tableau_arg, "tableau rows as JSON, e.g. [[1,2],[3]]");
    max->add_option("--pattern", pattern_arg, "contraction pairs as JSON, e.g. [[1,2]]");

    CLI::App* dec = app.add_subcommand("decompose", "tensor-power decomposition certificates");
    add_common(dec, dec_o, 2, 3);

    CLI::App* chr = app.add_subcommand("character", "weight multiplicity table");
    add_common(chr, chr_o, 1, 4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage errors are distinct from verification failures
    }

    auto order = [](const std::string& c) {
        return c == "lr" ? ComposeOrder::LeftToRight : ComposeOrder::RightToLeft;
    };
    try {
        if (rel->parsed()) return emit(periplectiq::drive_relations(rel_o.n, rel_o.k, mutate), rel_o);
        if (max->parsed())
            return emit(periplectiq::drive_maximal(max_o.n, max_o.k, order(max_o.convention),
                                                   tableau_arg, pattern_arg),
                        max_o);
        if (dec->parsed())
            return emit(periplectiq::drive_decompose(dec_o.n, dec_o.k, order(dec_o.convention)),
                        dec_o);
        if (chr->parsed()) return emit(periplectiq::drive_character(chr_o.n, chr_o.k), chr_o);
    } catch (const periplectiq::ParseError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const periplectiq::PatternError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
