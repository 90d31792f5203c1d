// tropmirror CLI: exact combinatorial mirrors of nearly-tropical
// hypersurfaces and complete intersections.
//
// Subcommands: subdivide, mirror, potential, critlocus, wallcheck, converse, ci.
// Exit codes: 0 success, 2 validation/parse failure, 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropmirror/io.hpp"

using namespace tropmirror;

namespace {

bool color_enabled() { return std::getenv("NO_COLOR") == nullptr; }

void log_error(const std::string& kind, const std::string& msg) {
    if (color_enabled())
        std::cerr << "\033[31m" << kind << "\033[0m: " << msg << "\n";
    else
        std::cerr << kind << ": " << msg << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Internal, "cannot write to '" + path + "'");
    out << bytes;
}

struct CommonOpts {
    std::string input;
    std::string out;
    std::string svg;
    std::string cutoff;
    std::vector<std::string> del;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_delete) {
    cmd->add_option("input", o.input, "input JSON file")->required();
    cmd->add_option("--out", o.out, "report path (default: stdout)");
    cmd->add_option("--svg", o.svg, "write an SVG of the tropical curve (n = 2)");
    cmd->add_option("--cutoff", o.cutoff, "truncation energy as a rational");
    if (with_delete)
        cmd->add_option("--delete", o.del,
                        "rays to delete: 'all', 'none', or directions like '(-1,0)' (repeatable)");
}

ExponentVector parse_direction(const std::string& s) {
    ExponentVector v;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') {
            v.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) v.push_back(std::stoll(cur));
    return v;
}

int run_command(JobSpec::Mode mode, JobSpec::Depth depth, const CommonOpts& o) {
    JobSpec job = parse_input(read_file(o.input));
    job.mode = mode;
    job.depth = depth;
    if (!o.cutoff.empty()) job.cutoff = parse_rational(o.cutoff);
    if (!o.del.empty()) {
        if (o.del.size() == 1 && o.del[0] == "all") job.modification = ModificationSpec::all();
        else if (o.del.size() == 1 && o.del[0] == "none")
            job.modification = ModificationSpec::empty();
        else {
            std::vector<ExponentVector> dirs;
            for (const auto& d : o.del) dirs.push_back(parse_direction(d));
            job.modification = ModificationSpec::dirs(std::move(dirs));
        }
    }
    job.svg = !o.svg.empty();

    Json rep = run_job(job);
    std::string bytes = report_bytes(rep);
    std::string out_path = !o.out.empty() ? o.out : job.report_path;
    if (!out_path.empty()) write_file(out_path, bytes);
    else std::cout << bytes;

    if (!o.svg.empty()) {
        if (job.mode == JobSpec::Mode::Ci || job.points.n != 2)
            throw Error(ErrorKind::ValidationError, "--svg needs a 2-dimensional hypersurface datum");
        RegularSubdivision s = lower_hull_subdivision(job.points);
        TropicalComplex tc = build_tropical_complex(job.points, s);
        TropicalCurveGraph g = curve_graph(job.points, s, tc);
        write_file(o.svg, render_svg(job.points, s, tc, g));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact SYZ mirrors of nearly-tropical hypersurfaces"};
    app.require_subcommand(1);

    CommonOpts o_sub, o_mir, o_pot, o_crit, o_wall, o_conv, o_ci;
    CLI::App* c_sub = app.add_subcommand("subdivide", "regular subdivision and tropical complex");
    add_common(c_sub, o_sub, false);
    CLI::App* c_mir = app.add_subcommand("mirror", "mirror polytope and fan data");
    add_common(c_mir, o_mir, false);
    CLI::App* c_pot =
        app.add_subcommand("potential", "superpotentials, vanishing orders, atlas");
    add_common(c_pot, o_pot, false);
    CLI::App* c_crit = app.add_subcommand("critlocus", "critical locus of the mirror potential");
    add_common(c_crit, o_crit, true);
    CLI::App* c_wall = app.add_subcommand("wallcheck", "cocycle and chart-invariance suites");
    add_common(c_wall, o_wall, false);
    CLI::App* c_conv = app.add_subcommand("converse", "leading-order converse charts");
    add_common(c_conv, o_conv, false);
    CLI::App* c_ci = app.add_subcommand("ci", "complete intersection mirror");
    add_common(c_ci, o_ci, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_sub->parsed())
            return run_command(JobSpec::Mode::Hypersurface, JobSpec::Depth::Subdivision, o_sub);
        if (c_mir->parsed())
            return run_command(JobSpec::Mode::Hypersurface, JobSpec::Depth::Mirror, o_mir);
        if (c_pot->parsed())
            return run_command(JobSpec::Mode::Hypersurface, JobSpec::Depth::Potential, o_pot);
        if (c_crit->parsed())
            return run_command(JobSpec::Mode::Critlocus, JobSpec::Depth::Potential, o_crit);
        if (c_wall->parsed())
            return run_command(JobSpec::Mode::Wallcheck, JobSpec::Depth::Potential, o_wall);
        if (c_conv->parsed())
            return run_command(JobSpec::Mode::Converse, JobSpec::Depth::Potential, o_conv);
        if (c_ci->parsed())
            return run_command(JobSpec::Mode::Ci, JobSpec::Depth::Potential, o_ci);
    } catch (const Error& e) {
        log_error(error_kind_name(e.kind()), e.what());
        bool user_error = e.kind() == ErrorKind::ParseError ||
                          e.kind() == ErrorKind::ValidationError ||
                          e.kind() == ErrorKind::WrongDimension ||
                          e.kind() == ErrorKind::DegenerateInput;
        return user_error ? 2 : 3;
    } catch (const std::exception& e) {
        log_error("Internal", e.what());
        return 3;
    }
    return 0;
}
