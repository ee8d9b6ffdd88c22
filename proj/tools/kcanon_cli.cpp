// Command-line front end. Talks to the library exclusively through the C
// interface in kcanon.h; everything here is argument handling and I/O.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcanon.h"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

bool parse_csv_weight(const std::string& text, std::vector<int64_t>& out) {
    out.clear();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        const std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(piece, &used));
            if (used != piece.size())
                return false;
        } catch (const std::exception&) {
            return false;
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return !out.empty();
}

int exit_code_for(int status) {
    switch (status) {
    case KCANON_OK:
        return 0;
    case KCANON_ERR_INTERNAL:
        return kExitInternal;
    default:
        return kExitUsage;
    }
}

int emit(kcanon_ctx* ctx, int status, char* payload) {
    if (status != KCANON_OK) {
        std::fprintf(stderr, "kcanon: %s: %s\n", kcanon_strerror(status), kcanon_last_error(ctx));
        return exit_code_for(status);
    }
    std::fputs(payload, stdout);
    kcanon_string_free(payload);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical bases in the equivariant K-group of the nilpotent cone"};
    app.require_subcommand(1);

    std::string system;
    std::string format = "json";
    std::string weight_text;
    int64_t cutoff = -1;
    int64_t bound = 24;
    int threads = 1;

    app.add_option("--system", system, "root system, e.g. A1, A3, B2, C2, G2")->required();
    app.add_option("--format", format, "output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--weight", weight_text,
                   "weight as comma-separated fundamental-weight coordinates, e.g. 3,0");
    app.add_option("--cutoff", cutoff, "truncation bound <mu,2rho^vee> for gamma (default 4<lambda,2rho^vee>)");
    app.add_option("--bound", bound, "sweep bound <lambda,2rho^vee> for bmatrix/verify (default 24)");
    app.add_option("--threads", threads, "worker threads for bmatrix columns (default 1)");

    auto* cmd_canonical = app.add_subcommand("canonical", "canonical element C(lambda)");
    auto* cmd_bmatrix = app.add_subcommand("bmatrix", "b-polynomial table up to --bound");
    auto* cmd_gamma = app.add_subcommand("gamma", "graded character of C(lambda) up to --cutoff");
    auto* cmd_straighten = app.add_subcommand("straighten", "expansion of e^lambda in the dominant basis");
    auto* cmd_mcgovern = app.add_subcommand("mcgovern", "orbit classes for the bundled orbit table");
    auto* cmd_verify = app.add_subcommand("verify", "run the verification dashboard");
    for (auto* sub : {cmd_canonical, cmd_bmatrix, cmd_gamma, cmd_straighten, cmd_mcgovern, cmd_verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    kcanon_ctx* ctx = nullptr;
    char* err = nullptr;
    int status = kcanon_ctx_new(system.c_str(), &ctx, &err);
    if (status != KCANON_OK) {
        std::fprintf(stderr, "kcanon: %s\n", err ? err : kcanon_strerror(status));
        kcanon_string_free(err);
        return kExitUsage;
    }

    std::vector<int64_t> weight;
    const bool needs_weight = cmd_canonical->parsed() || cmd_gamma->parsed() || cmd_straighten->parsed();
    if (needs_weight) {
        if (weight_text.empty()) {
            std::fprintf(stderr, "kcanon: this command requires --weight\n");
            kcanon_ctx_free(ctx);
            return kExitUsage;
        }
        if (!parse_csv_weight(weight_text, weight)) {
            std::fprintf(stderr, "kcanon: cannot parse weight '%s'\n", weight_text.c_str());
            kcanon_ctx_free(ctx);
            return kExitUsage;
        }
    }

    int rc = 0;
    char* payload = nullptr;
    if (cmd_canonical->parsed()) {
        status = kcanon_canonical(ctx, weight.data(), weight.size(), format.c_str(), &payload);
        rc = emit(ctx, status, payload);
    } else if (cmd_straighten->parsed()) {
        status = kcanon_straighten(ctx, weight.data(), weight.size(), format.c_str(), &payload);
        rc = emit(ctx, status, payload);
    } else if (cmd_gamma->parsed()) {
        status = kcanon_gamma(ctx, weight.data(), weight.size(), cutoff, format.c_str(), &payload);
        rc = emit(ctx, status, payload);
    } else if (cmd_bmatrix->parsed()) {
        status = kcanon_bmatrix(ctx, bound, threads, format.c_str(), &payload);
        rc = emit(ctx, status, payload);
    } else if (cmd_mcgovern->parsed()) {
        status = kcanon_mcgovern(ctx, format.c_str(), &payload);
        rc = emit(ctx, status, payload);
    } else if (cmd_verify->parsed()) {
        int failed = 0;
        status = kcanon_verify(ctx, bound, format.c_str(), &payload, &failed);
        rc = emit(ctx, status, payload);
        if (rc == 0 && failed > 0) {
            std::fprintf(stderr, "kcanon: %d check(s) failed\n", failed);
            rc = kExitVerifyFailed;
        }
    }

    kcanon_ctx_free(ctx);
    return rc;
}
