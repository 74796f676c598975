#ifndef TORIC_CONTACT_TOOLS_CLI_APP_HPP
#define TORIC_CONTACT_TOOLS_CLI_APP_HPP

// Command-line driver. Exit codes: 0 success, 1 the mathematics says no
// (verification mismatch, sampling violation), 2 bad input or usage.

#include <toric_contact/io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace toric_contact::cli {

inline constexpr int kOk = 0;
inline constexpr int kMathFailure = 1;
inline constexpr int kInputError = 2;

inline std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw Error("cannot open '" + path + "'");
    return read_all(f);
}

inline IntVec parse_int_list(const std::string& text, const std::string& what) {
    IntVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rational q;
        try {
            q = parse_rational(item);
        } catch (const Error&) {
            throw Error(what + ": '" + item + "' is not an integer");
        }
        if (!is_integral(q))
            throw Error(what + ": '" + item + "' is not an integer");
        out.push_back(q.get_num());
    }
    if (out.empty())
        throw Error(what + ": empty list");
    return out;
}

inline std::string join(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
}

struct Options {
    std::string input = "-";
    std::string output = "text";
    std::string mode;
    std::string reeb;
    std::string weights;
    std::string presentation;
    std::size_t count = 10000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    bool emit_vertices = false;
};

class Runner {
public:
    Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    ToricContactDatum load_datum(const Options& o) {
        std::string text = o.input == "-" ? read_all(in_) : read_file(o.input);
        io::DatumDocument doc = io::datum_document_from_json(io::parse_json(text));
        if (o.mode == "rational")
            doc.mode = ReebMode::rational;
        else if (o.mode == "irrational")
            doc.mode = ReebMode::irrational;
        return validate_datum(std::move(doc.polytope), std::move(doc.reeb), doc.mode);
    }

    void emit(const io::json& j) { out_ << j.dump(2) << '\n'; }

    int validate(const Options& o) {
        ToricContactDatum d = load_datum(o);
        io::json j = io::to_json(d);
        if (o.emit_vertices)
            j["vertices"] = io::vertices_to_json(d.vertices());
        emit(j);
        return kOk;
    }

    int classify(const Options& o) {
        ToricContactDatum d = load_datum(o);
        ClassificationReport r = toric_contact::classify(d);
        if (o.output == "json") {
            emit(io::to_json(r));
            return kOk;
        }
        out_ << "regularity: " << to_string(r.regularity) << '\n'
             << "sasakian_compatible: " << (r.sasakian_compatible ? "true" : "false") << '\n'
             << "faces: " << r.per_face.size() << '\n';
        for (const auto& f : r.per_face) {
            out_ << "  face " << join(f.face) << "  holonomy " << f.holonomy.to_string()
                 << "  sample_point " << format_vector(f.sample_point) << "  isotropy [";
            for (std::size_t i = 0; i < f.isotropy_basis.size(); ++i)
                out_ << (i ? ", " : "") << format_vector(f.isotropy_basis[i]);
            out_ << "]\n";
        }
        return kOk;
    }

    int cone(const Options& o) {
        ToricContactDatum d = load_datum(o);
        emit(io::to_json(cone_over(d.polytope(), d.integral_reeb())));
        return kOk;
    }

    int slice(const Options& o) {
        ToricContactDatum d = load_datum(o);
        IntVec reeb = parse_int_list(o.reeb, "--reeb");
        emit(io::to_json(perturb_reeb(d, reeb)));
        return kOk;
    }

    int reduce(const Options& o) {
        emit(io::to_json(synthesize(load_datum(o))));
        return kOk;
    }

    int verify(const Options& o) {
        ToricContactDatum d = load_datum(o);
        SpherePresentation p = io::parse_presentation(read_file(o.presentation));
        VerificationReport r = verify_presentation(p, d);
        if (o.output == "json") {
            emit(io::to_json(r));
        } else {
            out_ << "verification: " << (r.holds() ? "holds" : "FAILS") << '\n'
                 << "polytope_match: " << (r.polytope_match ? "true" : "false") << '\n'
                 << "smooth: " << (r.smooth ? "true" : "false") << '\n';
            for (const auto& s : r.invariant_failures)
                out_ << "  invariant: " << s << '\n';
            for (const auto& s : r.vertex_diff)
                out_ << "  vertex_diff: " << s << '\n';
            for (const auto& s : r.local_freeness)
                out_ << "  stabilizer at " << format_vector(s.vertex) << ": "
                     << (s.order ? "order " + s.order->get_str() : std::string("infinite"))
                     << '\n';
        }
        return r.holds() ? kOk : kMathFailure;
    }

    int sphere(const Options& o) {
        WeightVector a(parse_int_list(o.weights, "--weights"));
        emit(io::to_json(weighted_simplex(a)));
        return kOk;
    }

    int sample(const Options& o) {
        WeightVector a(parse_int_list(o.weights, "--weights"));
        ConvexityReport r = convexity_sample_check(a, o.count, o.seed, o.tol);
        if (o.output == "json") {
            emit(io::to_json(r));
        } else {
            out_ << "samples: " << r.count << '\n'
                 << "tolerance: " << r.tolerance << '\n'
                 << "max_violation: " << std::setprecision(17) << r.max_violation << '\n'
                 << "violations: " << r.failures.size() << '\n';
        }
        return r.holds() ? kOk : kMathFailure;
    }

private:
    std::istream& in_;
    std::ostream& out_;
};

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Toric contact manifolds of Reeb type: classification and sphere presentations",
                 "toric-contact"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--input,-i", o.input, "datum document (default: stdin)");
        sub->add_option("--output,-o", o.output, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--mode", o.mode, "override the document's mode")
            ->check(CLI::IsMember({"rational", "irrational"}));
    };

    auto* validate = app.add_subcommand("validate", "validate and echo a normalized datum");
    add_io(validate);
    validate->add_flag("--emit-vertices", o.emit_vertices, "include exact vertices");
    auto* classify = app.add_subcommand("classify", "isotropy, holonomy and regularity");
    add_io(classify);
    auto* cone = app.add_subcommand("cone", "moment cone over the polytope");
    add_io(cone);
    auto* slice = app.add_subcommand("slice", "re-slice the cone with another Reeb vector");
    add_io(slice);
    slice->add_option("--reeb", o.reeb, "comma-separated integers")->required();
    auto* reduce = app.add_subcommand("reduce", "sphere presentation of the datum");
    add_io(reduce);
    auto* verify = app.add_subcommand("verify", "check a presentation against the datum");
    add_io(verify);
    verify->add_option("--presentation", o.presentation, "presentation document")->required();
    auto* sphere = app.add_subcommand("sphere", "weighted-simplex datum of a weighted sphere");
    sphere->add_option("--weights", o.weights, "comma-separated positive integers")->required();
    sphere->add_option("--output,-o", o.output)->check(CLI::IsMember({"json", "text"}));
    auto* sample = app.add_subcommand("sample", "sample the moment map of a weighted sphere");
    sample->add_option("--weights", o.weights, "comma-separated positive integers")->required();
    sample->add_option("--count", o.count, "number of samples");
    sample->add_option("--seed", o.seed, "PRNG seed");
    sample->add_option("--tol", o.tol, "allowed violation");
    sample->add_option("--output,-o", o.output)->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> argv_store{"toric-contact"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kInputError;
    }

    Runner r(in, out);
    try {
        if (*validate)
            return r.validate(o);
        if (*classify)
            return r.classify(o);
        if (*cone)
            return r.cone(o);
        if (*slice)
            return r.slice(o);
        if (*reduce)
            return r.reduce(o);
        if (*verify)
            return r.verify(o);
        if (*sphere)
            return r.sphere(o);
        if (*sample)
            return r.sample(o);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace toric_contact::cli

#endif  // TORIC_CONTACT_TOOLS_CLI_APP_HPP
