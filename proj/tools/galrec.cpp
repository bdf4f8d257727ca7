#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "galrec/claims.hpp"
#include "galrec/config.hpp"
#include "galrec/emit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

galrec::config::RunConfig load_config(const std::string& explicit_path) {
    std::string path = explicit_path;
    if (path.empty()) {
        const char* env = std::getenv("GALREC_CONFIG");
        if (env && *env) path = env;
    }
    if (path.empty()) return {};
    return galrec::config::load_config_file(path, galrec::claims::claim_ids());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"claim registry for early-modern mechanics and astronomy reconstructions"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "configuration file (key = value)");

    auto* list_cmd = app.add_subcommand("list", "list registered claims");
    std::string list_format = "md";
    list_cmd->add_option("--format", list_format, "md or json")
        ->check(CLI::IsMember({"md", "json"}));

    auto* run_cmd = app.add_subcommand("run", "evaluate one claim");
    std::string run_id, run_format = "md";
    run_cmd->add_option("id", run_id, "claim id")->required();
    run_cmd->add_option("--format", run_format, "md or json")
        ->check(CLI::IsMember({"md", "json"}));

    auto* emit_cmd = app.add_subcommand("emit", "write a claim's series data");
    std::string emit_id, emit_format, emit_out;
    emit_cmd->add_option("id", emit_id, "claim id")->required();
    emit_cmd->add_option("--format", emit_format, "csv or json")
        ->required()
        ->check(CLI::IsMember({"csv", "json"}));
    emit_cmd->add_option("--out", emit_out, "output path")->required();

    auto* report_cmd = app.add_subcommand("report", "run every claim against its expectation");
    std::string report_format = "md";
    int parallel = 1;
    report_cmd->add_option("--format", report_format, "md or json")
        ->check(CLI::IsMember({"md", "json"}));
    report_cmd->add_option("--parallel", parallel, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        galrec::config::RunConfig cfg = load_config(config_path);

        if (*list_cmd) {
            auto records = galrec::claims::list_claims();
            if (list_format == "json") {
                std::string out = "[";
                for (std::size_t i = 0; i < records.size(); ++i)
                    out += (i ? ",\n" : "\n") + galrec::claims::render_record_json(records[i]);
                std::cout << out << "]\n";
            } else {
                for (const auto& r : records)
                    std::cout << r.id << "  (" << r.section_ref << ")  " << r.title << "\n";
            }
            return kExitOk;
        }
        if (*run_cmd) {
            auto rec = galrec::claims::run_claim(run_id, cfg);
            std::cout << (run_format == "json" ? galrec::claims::render_record_json(rec)
                                               : galrec::claims::render_record_markdown(rec));
            return kExitOk;
        }
        if (*emit_cmd) {
            galrec::claims::emit_claim(emit_id, emit_format, emit_out, cfg);
            std::cout << "wrote " << emit_out << "\n";
            return kExitOk;
        }
        if (*report_cmd) {
            cfg.parallelism = parallel;
            auto rep = galrec::claims::report(cfg);
            std::cout << (report_format == "json" ? galrec::claims::render_report_json(rep)
                                                  : galrec::claims::render_report_markdown(rep));
            return rep.exit_code == 0 ? kExitOk : kExitMismatch;
        }
    } catch (const galrec::NotFoundError& e) {
        std::cerr << e.what() << "\n";
        if (!e.suggestions.empty()) {
            std::cerr << "did you mean:";
            for (const auto& s : e.suggestions) std::cerr << " " << s;
            std::cerr << "\n";
        }
        return kExitUsage;
    } catch (const galrec::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const galrec::Error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
