// Command-line front end: parse module descriptions, run the analysis
// pipeline, emit deterministic reports.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sjp/io.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sjp::ParseError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for the super Jordan plane"};
    app.require_subcommand(1);

    std::string file_a, file_b, label_text, word_text;
    bool as_json = false;
    unsigned bmax = 6, cmax = 6, nmax = 8;

    auto add_json = [&as_json](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit the report as JSON with stable key order");
    };

    CLI::App* check = app.add_subcommand("check", "verify the defining relations");
    check->add_option("file", file_a, "module description file")->required();
    add_json(check);

    CLI::App* classify = app.add_subcommand("classify", "canonical-form classification");
    classify->add_option("file", file_a, "module description file")->required();
    add_json(classify);

    CLI::App* decompose =
        app.add_subcommand("decompose", "split into indecomposable summands");
    decompose->add_option("file", file_a, "module description file")->required();
    add_json(decompose);

    CLI::App* iso = app.add_subcommand("iso", "decide isomorphism of two modules");
    iso->add_option("fileA", file_a, "first module")->required();
    iso->add_option("fileB", file_b, "second module")->required();
    add_json(iso);

    CLI::App* construct = app.add_subcommand("construct", "matrices of a canonical label");
    construct->add_option("label", label_text, "label, e.g. \"Dim2U(2,3)\"")->required();
    add_json(construct);

    CLI::App* nf = app.add_subcommand("nf", "normal form of a generator word");
    nf->add_option("word", word_text, "whitespace-separated letters, e.g. \"x2 x1\"")
        ->required();
    add_json(nf);

    CLI::App* selftest = app.add_subcommand("selftest", "run the identity suite");
    selftest->add_option("--bmax", bmax, "straightening bound for x21 powers");
    selftest->add_option("--cmax", cmax, "straightening bound for x2 powers");
    selftest->add_option("--nmax", nmax, "exponent bound for the power identities");
    add_json(selftest);

    CLI11_PARSE(app, argc, argv);

    try {
        sjp::Report report;
        if (*check) report = sjp::cmd_check(sjp::parse_input(read_file(file_a)));
        else if (*classify) report = sjp::cmd_classify(sjp::parse_input(read_file(file_a)));
        else if (*decompose) report = sjp::cmd_decompose(sjp::parse_input(read_file(file_a)));
        else if (*iso)
            report = sjp::cmd_iso(sjp::parse_input(read_file(file_a)),
                                  sjp::parse_input(read_file(file_b)));
        else if (*construct) report = sjp::cmd_construct(label_text);
        else if (*nf) report = sjp::cmd_nf(word_text);
        else report = sjp::cmd_selftest(bmax, cmax, nmax);
        std::cout << report.render(as_json);
        return report.exit_code;
    } catch (const sjp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sjp::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
