#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "octapet/calcs.hpp"
#include "octapet/errors.hpp"
#include "octapet/renorm.hpp"
#include "octapet/tiling.hpp"

namespace {

octapet::Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return octapet::Rational(mpq_class(mpz_class(text)));
    mpq_class q(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
    q.canonicalize();
    return octapet::Rational(q);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw octapet::Error("cannot write " + path);
    out << content;
}

int run_tiling(const std::string& s_text, const std::string& svg_path, const std::string& json_path,
               std::size_t max_seeds) {
    octapet::Rational s = parse_rational(s_text);
    octapet::PetSystem sys = octapet::build_system(s);
    octapet::Tiling tiling = octapet::compute_tiling(sys, max_seeds);
    std::cout << "parameter " << s.str() << ": " << tiling.tiles.size() << " tiles, covered area "
              << tiling.covered_area.str() << ", uncovered area " << tiling.uncovered_area.str()
              << (tiling.complete ? ", complete" : ", incomplete") << "\n";
    if (!svg_path.empty()) write_file(svg_path, octapet::tiling_to_svg(tiling));
    if (!json_path.empty()) write_file(json_path, octapet::tiling_to_json(tiling));
    return tiling.complete ? 0 : 1;
}

int run_verify(const std::string& fixtures, const std::string& json_path, bool with_calcs) {
    octapet::PiecewiseAffineSystem sys = octapet::load_fixtures(fixtures);
    octapet::PartitionReport report = octapet::verify_partition(sys);
    auto line = [](const std::string& label, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << label << "\n";
    };
    line("every vertex lies in at least three faces", report.vertex_faces_ok);
    line("face normals in improved form", report.normals_ok);
    line("pieces pairwise disjoint", report.disjoint_ok);
    line("piece images pairwise disjoint", report.images_disjoint_ok);
    line("pieces and images inside the bundle", report.containment_ok);
    line("piece volumes fill the bundle", report.volume_ok);
    line("pieces are maximal domains", report.maximality_ok);
    for (const std::string& f : report.failures) std::cout << "  - " << f << "\n";
    bool ok = report.ok();
    std::string json = octapet::partition_report_to_json(report);
    if (with_calcs) {
        std::vector<octapet::CalcReport> calcs = octapet::run_all_calcs(sys, fixtures);
        for (const octapet::CalcReport& c : calcs) {
            line(c.name, c.ok());
            for (const octapet::CalcCheck& check : c.checks) {
                if (!check.ok) std::cout << "  - " << check.label << ": " << check.detail << "\n";
            }
            if (!c.ok()) ok = false;
        }
        json.pop_back();
        json = json.substr(0, json.find_last_of('}') + 1);
        json = "{\"partition\": " + json + ", \"calculations\": " + octapet::calc_reports_to_json(calcs) + "}\n";
    }
    if (!json_path.empty()) write_file(json_path, json);
    return ok ? 0 : 1;
}

int run_renorm(const std::string& s_text, int depth) {
    octapet::Rational s = parse_rational(s_text);
    std::vector<octapet::Rational> chain = octapet::renorm_chain(s);
    std::cout << "chain:";
    for (const octapet::Rational& r : chain) std::cout << " " << r.str();
    std::cout << "\ncontinued fraction: " << octapet::continued_fraction(s).str() << "\n";
    std::cout << "oddly even: " << (octapet::oddly_even(s) ? "yes" : "no") << "\n";
    if (depth > 0) {
        std::cout << "orbit values in [0, 1] at depth " << depth << ":";
        for (const octapet::Rational& r : octapet::gamma_orbit_reduced(s, depth)) std::cout << " " << r.str();
        std::cout << "\n";
    }
    return 0;
}

int run_derive(std::int64_t lo, std::int64_t hi, const std::string& fixtures, const std::string& json_path) {
    octapet::DerivedPartition partition = octapet::derive_partition(lo, hi);
    std::cout << partition.pieces.size() << " pieces over [" << lo << ", " << hi << "]\n";
    std::string json = "[\n";
    for (std::size_t i = 0; i < partition.pieces.size(); ++i) {
        const octapet::Piece& p = partition.pieces[i];
        std::cout << "  " << p.vector.str() << ": " << p.polytope.vertices().size() << " vertices, 6*volume "
                  << p.polytope.volume6() << "\n";
        json += "  {\"vector\": \"" + p.vector.str() + "\", \"vertices\": [";
        const auto& verts = p.polytope.vertices();
        for (std::size_t v = 0; v < verts.size(); ++v) {
            json += (v ? ", [" : "[") + std::to_string(verts[v].x) + ", " + std::to_string(verts[v].y) + ", " +
                    std::to_string(verts[v].z) + "]";
        }
        json += "]}";
        json += (i + 1 < partition.pieces.size()) ? ",\n" : "\n";
    }
    json += "]\n";
    if (!json_path.empty()) write_file(json_path, json);
    if (lo == 210 && hi == 420) {
        for (const octapet::PieceDiff& d : octapet::published_beta_diff(fixtures, partition)) {
            std::cout << "note: derived " << d.name << " " << d.vector.str()
                      << " differs from the published vertex list\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification tools for the octagonal polytope exchange family"};
    app.require_subcommand(1);

    std::string s_text = "1/2", fixtures = "fixtures", svg_path, json_path;
    std::size_t max_seeds = 4096;
    int depth = 0;
    std::int64_t lo = 210, hi = 420;

    CLI::App* tiling = app.add_subcommand("tiling", "Compute the periodic tiling at a rational parameter");
    tiling->add_option("--s", s_text, "parameter as p/q")->required();
    tiling->add_option("--svg", svg_path, "write an SVG rendering");
    tiling->add_option("--json", json_path, "write the tiling as JSON");
    tiling->add_option("--max-seeds", max_seeds, "seed budget");

    CLI::App* verify = app.add_subcommand("verify", "Verify the fiber partition and the eight calculations");
    verify->add_option("--fixtures", fixtures, "fixture directory");
    verify->add_option("--json", json_path, "write the report as JSON");
    bool with_calcs = false;
    verify->add_flag("--calcs", with_calcs, "also run the eight calculations");

    CLI::App* renorm = app.add_subcommand("renorm", "Print the renormalization data of a parameter");
    renorm->add_option("--s", s_text, "parameter as p/q")->required();
    renorm->add_option("--depth", depth, "also list group-orbit values up to this word length");

    CLI::App* derive = app.add_subcommand("derive-partition", "Derive the partition over a fiber interval");
    derive->add_option("--lo", lo, "lower fiber bound (scaled by 420)");
    derive->add_option("--hi", hi, "upper fiber bound (scaled by 420)");
    derive->add_option("--fixtures", fixtures, "fixture directory");
    derive->add_option("--json", json_path, "write the pieces as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tiling->parsed()) return run_tiling(s_text, svg_path, json_path, max_seeds);
        if (verify->parsed()) return run_verify(fixtures, json_path, with_calcs);
        if (renorm->parsed()) return run_renorm(s_text, depth);
        if (derive->parsed()) return run_derive(lo, hi, fixtures, json_path);
    } catch (const octapet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
