// Command-line front end. Exit status: 0 success, 1 a checked property
// failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "centerkit/io.hpp"

namespace ck = centerkit;

namespace {

constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ck::InvalidArgument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
    std::vector<std::string> ids;
    for (const auto& r : raw) {
        std::stringstream ss(r);
        std::string id;
        while (std::getline(ss, id, ','))
            if (!id.empty()) ids.push_back(id);
    }
    return ids;
}

std::vector<ck::NamedPoint> compute_centers(const ck::Object& o, const std::vector<std::string>& ids) {
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) return ck::registered_centers(o);
    std::vector<ck::NamedPoint> out;
    for (const auto& id : ids) out.push_back({id, ck::find_center(id, ck::kind_of(o)).compute(o)});
    return out;
}

ck::CenterId triangle_center_id(const std::string& name) {
    const auto id = ck::parse_center_id(name);
    if (!id) throw ck::InvalidArgument("unknown triangle center '" + name + "'");
    return *id;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"centerkit: centers of geometric objects and their symmetry properties"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("-o,--output", output, "Write the result to this file instead of stdout");

    std::string in_file;
    std::vector<std::string> center_ids;
    std::string format = "json";
    bool with_line = false;
    auto* compute = app.add_subcommand("compute", "Compute centers of an object");
    compute->add_option("--center", center_ids, "Center id (repeatable, comma lists allowed; default all)");
    compute->add_option("--in", in_file, "Object JSON file")->required();
    compute->add_option("--out", format, "Output format")->check(CLI::IsMember({"json", "svg"}));
    compute->add_flag("--line", with_line, "SVG: draw the line through the first two centers");

    std::string kind_name;
    int trials = 1000;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    auto* equi = app.add_subcommand("check-equivariance", "Random-similarity equivariance suite for one center");
    equi->add_option("--center", center_ids, "Center id")->required();
    equi->add_option("--kind", kind_name, "multiset|weighted|triangle|polygon|region")->required();
    equi->add_option("--trials", trials)->check(CLI::PositiveNumber);
    equi->add_option("--seed", seed);
    equi->add_option("--tolerance", tolerance);

    auto* sym = app.add_subcommand("symmetry", "Symmetry group and fixed set of an object");
    sym->add_option("--in", in_file)->required();

    auto* adm = app.add_subcommand("admissible", "Check that centers lie in the fixed set of the symmetry group");
    adm->add_option("--in", in_file)->required();
    adm->add_option("--centers", center_ids, "Center ids (comma separated; default all)");

    std::string x1, x2, family = "a=1,b=0.6:1.4,c=0.6:1.4,step=0.01";
    double locus_tol = 1e-9;
    auto* coin = app.add_subcommand("coincide", "Where two triangle centers coincide over a triangle family");
    coin->add_option("--x1", x1)->required();
    coin->add_option("--x2", x2)->required();
    coin->add_option("--family", family, "e.g. a=1,b=0.6:1.4,c=0.6:1.4,step=0.01");
    coin->add_option("--tol", locus_tol, "Relative tolerance");

    int steps = 10;
    bool normalize = false;
    auto* iter = app.add_subcommand("iterate", "Iterate the midpoint-polygon automorphism");
    iter->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
    iter->add_option("--in", in_file)->required();
    iter->add_flag("--normalize", normalize, "Rescale every iterate to unit diameter");
    iter->add_option("--out", format)->check(CLI::IsMember({"json", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    int status = 0;
    std::string text;
    try {
        if (*compute) {
            const ck::Object o = ck::parse_object(read_file(in_file));
            const auto centers = compute_centers(o, split_ids(center_ids));
            if (format == "svg") {
                ck::SvgScene scene{centers, {}, {}};
                if (with_line && centers.size() >= 2)
                    scene.lines.push_back(ck::central_line(centers[0].point, centers[1].point, ck::object_diameter(o)));
                text = ck::render_svg(o, scene);
            } else {
                text = ck::dump(ck::versioned(ck::centers_json(centers)));
            }
        } else if (*equi) {
            const auto kind = ck::parse_kind(kind_name);
            if (!kind) throw ck::InvalidArgument("unknown object kind '" + kind_name + "'");
            if (center_ids.size() != 1) throw ck::InvalidArgument("exactly one --center is required");
            const auto report = ck::check_equivariance(center_ids[0], *kind, trials, seed, tolerance);
            text = ck::dump(ck::versioned(ck::to_json(report)));
            if (!report.pass) status = kPropertyFailure;
        } else if (*sym) {
            const ck::Object o = ck::parse_object(read_file(in_file));
            text = ck::dump(ck::versioned(ck::to_json(ck::object_symmetry_group(o))));
        } else if (*adm) {
            const ck::Object o = ck::parse_object(read_file(in_file));
            const auto centers = compute_centers(o, split_ids(center_ids));
            const auto g = ck::object_symmetry_group(o);
            const auto entries = ck::admissible_center_check(g, ck::object_diameter(o), centers);
            ck::Json j = ck::to_json(entries);
            j["group"] = ck::describe(g);
            text = ck::dump(ck::versioned(j));
            if (!j["pass"].get<bool>()) status = kPropertyFailure;
        } else if (*coin) {
            const auto fam = ck::TriangleFamily::parse(family);
            const auto locus = ck::coincidence_locus(triangle_center_id(x1), triangle_center_id(x2), fam,
                                                     ck::Tolerance(locus_tol, 1e-12));
            text = ck::dump(ck::versioned(ck::to_json(locus)));
        } else if (*iter) {
            const ck::Object o = ck::parse_object(read_file(in_file));
            const auto* p = std::get_if<ck::Polygon>(&o);
            if (p == nullptr) throw ck::InvalidArgument("iterate needs a polygon");
            const auto orbit = ck::iterate_automorphism(*p, steps, normalize);
            if (format == "svg") text = ck::render_svg(o, {{}, {}, orbit});
            else text = ck::dump(ck::versioned(ck::orbit_json(orbit)));
        }
    } catch (const ck::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }

    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!(out << text)) {
            std::cerr << "error: cannot write " << output << "\n";
            return kInputError;
        }
    }
    return status;
}
