// Command-line front end: parse a code-spec file, run any pipeline stage,
// and emit text or JSON artifacts.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bicycl/idealbasis.hpp"
#include "bicycl/specfile.hpp"

using namespace bicycl;
using ojson = nlohmann::ordered_json;

namespace {

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::SpecParseError:
            return 2;
        case Errc::NotPrime:
        case Errc::NotIrreducible:
        case Errc::NotPrimitive:
            return 3;
        case Errc::CapExceeded:
            return 5;
        case Errc::OracleDisagreement:
        case Errc::RankDeficient:
            return 7;
        default:
            return 4;
    }
}

std::string poly_text(const std::vector<int64_t>& coeffs, char var) {
    std::ostringstream os;
    bool first = true;
    for (int i = (int)coeffs.size() - 1; i >= 0; --i) {
        if (coeffs[(size_t)i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << coeffs[(size_t)i];
        } else {
            if (coeffs[(size_t)i] != 1) os << coeffs[(size_t)i];
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return first ? "0" : os.str();
}

std::string point_str(const FieldTower& F, const ZeroPoint& z) {
    return "(" + F.to_string(z.a) + ", " + F.to_string(z.b) + ")";
}

std::string class_list_str(const FieldTower& F, const std::vector<std::vector<ZeroPoint>>& classes) {
    std::ostringstream os;
    bool first_class = true;
    for (const auto& cls : classes) {
        if (!first_class) os << "; ";
        first_class = false;
        for (size_t i = 0; i < cls.size(); ++i) os << (i ? ", " : "") << point_str(F, cls[i]);
    }
    return os.str();
}

std::string point_list_str(const FieldTower& F, const std::vector<ZeroPoint>& pts) {
    std::ostringstream os;
    for (size_t i = 0; i < pts.size(); ++i) os << (i ? ", " : "") << point_str(F, pts[i]);
    return os.str();
}

ojson point_json(const ZeroPoint& z) { return ojson::array({z.a.exp, z.b.exp}); }

ojson points_json(const std::vector<ZeroPoint>& pts) {
    ojson arr = ojson::array();
    for (const auto& z : pts) arr.push_back(point_json(z));
    return arr;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::SpecParseError, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& format, const std::string& command, const std::string& text,
          ojson data) {
    if (format == "json") {
        ojson out;
        out["schema"] = "bicycl.output/1";
        out["command"] = command;
        out["data"] = std::move(data);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

struct ParamsReport {
    std::string line;
    ojson data;
};

ParamsReport params_report(const CodeHandle& code) {
    CodeParameters prm = compute_parameters(code);
    ParamsReport rep;
    std::ostringstream os;
    os << "[" << prm.area << ", " << prm.K << ", " << (prm.dmin ? std::to_string(*prm.dmin) : "?")
       << "]\n";
    if (!prm.dmin) os << "dmin: " << prm.dmin_note << "\n";
    rep.line = os.str();
    rep.data["area"] = prm.area;
    rep.data["K"] = prm.K;
    if (prm.dmin)
        rep.data["dmin"] = *prm.dmin;
    else {
        rep.data["dmin"] = nullptr;
        rep.data["dminNote"] = prm.dmin_note;
    }
    return rep;
}

void run(const std::string& command, const CodeSpec& spec, const std::string& format,
         const std::string& message_path, const std::string& word_path, bool verbose,
         int& exit_status) {
    if (command == "field-info") {
        auto tower = build_tower(spec);
        FieldElement l1 = parse_element_token(*tower, spec.lambda1_tok);
        FieldElement l2 = parse_element_token(*tower, spec.lambda2_tok);
        if (l1.is_zero() || l2.is_zero() || !tower->in_subfield(l1, 1) ||
            !tower->in_subfield(l2, 1))
            fail(Errc::InvalidArgument, "lambda values must be nonzero elements of F_q");
        int64_t step = (int64_t)(tower->group_order() / (tower->q() - 1));
        int minL = splitting_degree(tower->q(), (uint64_t)spec.M, (uint64_t)(l1.exp / step),
                                    (uint64_t)spec.N, (uint64_t)(l2.exp / step));
        std::ostringstream os;
        if (!spec.preset.empty()) os << "preset: " << spec.preset << "\n";
        os << "p: " << tower->p() << "\ne: " << tower->e() << "\nL: " << tower->L()
           << "\nq: " << tower->q() << "\ndefining: " << poly_text(tower->defining_poly(), 'x')
           << "\nelements: " << tower->size() << "\nalpha_order: " << tower->group_order()
           << "\nmin_splitting_L: " << minL << "\n";
        ojson data;
        if (!spec.preset.empty()) data["preset"] = spec.preset;
        data["p"] = tower->p();
        data["e"] = tower->e();
        data["L"] = tower->L();
        data["q"] = tower->q();
        data["definingPoly"] = tower->defining_poly();
        data["elements"] = tower->size();
        data["alphaOrder"] = tower->group_order();
        data["minSplittingL"] = minL;
        emit(format, command, os.str(), std::move(data));
        return;
    }

    CodeHandle code = build_code(spec);
    const FieldTower& F = *code.params.F();

    if (command == "czset") {
        std::ostringstream os;
        os << "gamma: " << F.to_string(code.gamma) << "\nbeta: " << F.to_string(code.beta)
           << "\nz1: " << code.v0.z1 << "\nz2: " << code.v0.z2 << "\n";
        os << "V0 (" << code.v0.size() << "): " << class_list_str(F, code.v0.classes) << "\n";
        os << "V0hat (" << code.v0.reps.size() << "): " << point_list_str(F, code.v0.reps)
           << "\n";
        os << "Vc (" << code.vc.size() << "): " << point_list_str(F, code.vc) << "\n";
        os << "ECZ (" << code.ecz.size() << "): " << point_list_str(F, code.ecz) << "\n";
        os << "s: " << code.profile.s() << "\nd: " << code.profile.d << "\nK: " << code.K
           << "\n";
        for (int i = 0; i < code.profile.s(); ++i) {
            const auto& g = code.profile.groups[(size_t)i];
            os << "group " << i + 1 << ": xi=" << F.to_string(g.xi) << " m=" << g.m
               << " g_xi(x)=" << g.g_xi.str('x') << "\n";
            for (size_t jj = 0; jj < g.etas.size(); ++jj)
                os << "  eta " << jj + 1 << ": " << F.to_string(g.etas[jj])
                   << " n=" << g.n_ij[jj] << " M(y)=" << g.eta_min_polys[jj].str() << "\n";
            os << "  G_eta(y)=" << g.g_eta.str() << " n=" << g.n << "\n";
        }
        ojson data;
        data["gamma"] = code.gamma.exp;
        data["beta"] = code.beta.exp;
        data["z1"] = code.v0.z1;
        data["z2"] = code.v0.z2;
        ojson classes = ojson::array();
        for (const auto& cls : code.v0.classes) classes.push_back(points_json(cls));
        data["V0classes"] = std::move(classes);
        data["V0hat"] = points_json(code.v0.reps);
        data["Vc"] = points_json(code.vc);
        data["ecz"] = points_json(code.ecz);
        data["s"] = code.profile.s();
        data["d"] = code.profile.d;
        data["K"] = code.K;
        ojson groups = ojson::array();
        for (const auto& g : code.profile.groups) {
            ojson jg;
            jg["xi"] = g.xi.exp;
            jg["m"] = g.m;
            jg["gXi"] = g.g_xi.str('x');
            ojson etas = ojson::array();
            for (size_t jj = 0; jj < g.etas.size(); ++jj) {
                ojson je;
                je["eta"] = g.etas[jj].exp;
                je["n"] = g.n_ij[jj];
                je["minPoly"] = g.eta_min_polys[jj].str();
                etas.push_back(std::move(je));
            }
            jg["etas"] = std::move(etas);
            jg["GEta"] = g.g_eta.str();
            jg["n"] = g.n;
            groups.push_back(std::move(jg));
        }
        data["groups"] = std::move(groups);
        emit(format, command, os.str(), std::move(data));
    } else if (command == "basis") {
        IdealBasis basis = build_basis(code.profile, code.options.prune_basis);
        std::ostringstream os;
        os << "B (" << basis.polys.size() << " members):\n";
        for (size_t i = 0; i < basis.polys.size(); ++i)
            os << "g_" << basis.labels[i] << " = " << basis.polys[i].str() << "\n";
        if (verbose) {
            for (size_t i = 0; i < basis.chains.size(); ++i) {
                os << "chain i=" << i + 1 << ":\n";
                for (size_t k = 0; k < basis.chains[i].size(); ++k)
                    os << "  f_" << i + 1 + k << "^(" << i + 1
                       << ") = " << basis.chains[i][k].str() << "\n";
            }
        }
        ojson data;
        ojson members = ojson::array();
        for (size_t i = 0; i < basis.polys.size(); ++i) {
            ojson m;
            m["label"] = basis.labels[i];
            m["poly"] = basis.polys[i].str();
            members.push_back(std::move(m));
        }
        data["members"] = std::move(members);
        if (verbose) {
            ojson chains = ojson::array();
            for (const auto& chain : basis.chains) {
                ojson jc = ojson::array();
                for (const auto& f : chain) jc.push_back(f.str());
                chains.push_back(std::move(jc));
            }
            data["chains"] = std::move(chains);
        }
        emit(format, command, os.str(), std::move(data));
    } else if (command == "check-tensor") {
        std::ostringstream os;
        ojson rows = ojson::array();
        for (int k = 0; k < code.params.M; ++k)
            for (int l = 0; l < code.params.N; ++l) {
                os << "h_{" << k << l << "}=" << code.H.h_string(k, l) << "\n";
                ojson r;
                r["k"] = k;
                r["l"] = l;
                r["tuple"] = code.H.h_string(k, l);
                rows.push_back(std::move(r));
            }
        ojson data;
        data["d"] = code.H.d;
        data["piStrategy"] = code.H.pi_strategy;
        ojson pi = ojson::array();
        for (auto [k, l] : code.H.pi) pi.push_back(ojson::array({k, l}));
        data["pi"] = std::move(pi);
        data["rows"] = std::move(rows);
        emit(format, command, os.str(), std::move(data));
    } else if (command == "gen-tensor") {
        std::ostringstream os;
        ojson rows = ojson::array();
        for (int i = 0; i < code.params.M; ++i) {
            os << "row " << i << ":\n";
            ojson jr = ojson::array();
            for (int j = 0; j < code.params.N; ++j) {
                const BiPoly& g = code.G.g_polys[(size_t)i * code.params.N + j];
                os << "  g_{" << i << "," << j << "} = " << g.str() << "\n";
                jr.push_back(g.str());
            }
            rows.push_back(std::move(jr));
        }
        ojson data;
        data["rows"] = std::move(rows);
        emit(format, command, os.str(), std::move(data));
    } else if (command == "encode") {
        if (message_path.empty())
            fail(Errc::SpecParseError, "encode requires --message FILE");
        BiPoly message = parse_grid(code.params, read_file(message_path));
        BiPoly c = encode(code, message);
        ojson data;
        data["codeword"] = c.grid_str();
        emit(format, command, c.grid_str(), std::move(data));
    } else if (command == "verify") {
        if (word_path.empty()) fail(Errc::SpecParseError, "verify requires --word FILE");
        BiPoly word = parse_grid(code.params, read_file(word_path));
        bool ok = is_codeword(code, word, MembershipMode::Both);
        std::ostringstream os;
        os << "codeword: " << (ok ? "yes" : "no") << "\n";
        ojson data;
        data["codeword"] = ok;
        emit(format, command, os.str(), std::move(data));
        if (!ok) exit_status = 1;
    } else if (command == "params") {
        ParamsReport rep = params_report(code);
        emit(format, command, rep.line, std::move(rep.data));
    } else if (command == "dual") {
        CodeHandle dual = dual_code(code);
        const FieldTower& DF = *dual.params.F();
        ParamsReport rep = params_report(dual);
        std::ostringstream os;
        os << "lambda1_dual: " << element_token(DF, dual.params.lambda1)
           << "\nlambda2_dual: " << element_token(DF, dual.params.lambda2)
           << "\ngamma_dual: " << DF.to_string(dual.gamma)
           << "\nbeta_dual: " << DF.to_string(dual.beta) << "\n|Vc_dual|: " << dual.vc.size()
           << "\nECZ_dual (" << dual.ecz.size() << "): " << point_list_str(DF, dual.ecz)
           << "\nK_dual: " << dual.K << "\nparams: " << rep.line;
        ojson data;
        data["lambda1"] = element_token(DF, dual.params.lambda1);
        data["lambda2"] = element_token(DF, dual.params.lambda2);
        data["gamma"] = dual.gamma.exp;
        data["beta"] = dual.beta.exp;
        data["VcSize"] = dual.vc.size();
        data["ecz"] = points_json(dual.ecz);
        data["K"] = dual.K;
        data["params"] = std::move(rep.data);
        emit(format, command, os.str(), std::move(data));
    } else {
        fail(Errc::InvalidArgument, "unknown command: " + command);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-D constacyclic code construction toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    struct Cmd {
        CLI::App* sub = nullptr;
        std::string spec_path;
    };
    std::map<std::string, Cmd> cmds;
    std::string message_path, word_path;
    bool verbose = false;
    for (const char* name : {"field-info", "czset", "basis", "check-tensor", "gen-tensor",
                             "encode", "verify", "params", "dual"}) {
        Cmd c;
        c.sub = app.add_subcommand(name, "");
        cmds[name] = c;
        auto& stored = cmds[name];
        stored.sub->add_option("spec", stored.spec_path, "Code spec file (JSON)")->required();
    }
    cmds["encode"].sub->add_option("--message", message_path, "Message array file")->required();
    cmds["verify"].sub->add_option("--word", word_path, "Array file to test")->required();
    cmds["basis"].sub->add_flag("-v,--verbose", verbose, "Include provenance chains");

    CLI11_PARSE(app, argc, argv);

    try {
        for (auto& [name, cmd] : cmds) {
            if (!cmd.sub->parsed()) continue;
            CodeSpec spec = load_spec(cmd.spec_path);
            int exit_status = 0;
            run(name, spec, format, message_path, word_path, verbose, exit_status);
            return exit_status;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 9;
    }
    return 0;
}
