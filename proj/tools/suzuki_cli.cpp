// Command-line front end for the Suzuki algebra workbench. All
// computation goes through the C API in suzuki.h; this file only parses
// arguments, assembles the JSON envelope and maps verdicts to exit codes.
//
// Exit codes:
//   0  success, all verdicts in the payload true
//   1  verification failure or nonempty discrepancy log (payload ok=false)
//   2  invalid arguments / usage error

#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <json.hpp>

#include "suzuki.h"

namespace {

using Json = nlohmann::ordered_json;

struct Args {
    std::string command;
    long N = 0;
    long n = 0;
    int mu = 0;
    int lambda = 0;
    std::string out_path;
    std::string format = "json";
    std::string grid = "default";
    std::string aut;
    long s = 0;
    long t = 0;
    std::optional<long> seed;
    std::string cache_dir;
    long max_dim = 200;
};

void print_usage(std::ostream& os) {
    os << "usage: suzuki <command> -N <int> -n <int> --mu {+1,-1} --lambda {+1,-1} [options]\n"
          "\n"
          "commands:\n"
          "  algebra-build          build structure tables, print a summary\n"
          "  algebra-verify         verify every Hopf axiom exhaustively\n"
          "  algebra-export         dump basis, unit and sparse mult tables\n"
          "  coalgebra-grouplikes   list and verify the group-like elements\n"
          "  coalgebra-decompose    check the simple-subcoalgebra decomposition rank\n"
          "  comodule-twist         twist Lambda_{s,t} by an automorphism (--s --t --aut)\n"
          "  aut-list               enumerate family candidates with verdicts\n"
          "  aut-verify             verify one descriptor (--aut)\n"
          "  aut-table              composition table of the verified automorphism group\n"
          "  aut-search             exhaustive ansatz search over a coefficient grid\n"
          "\n"
          "options:\n"
          "  -N <int>               family parameter N >= 1\n"
          "  -n <int>               family parameter n >= 2\n"
          "  --mu {+1,-1}           sign mu (literal +1 or -1)\n"
          "  --lambda {+1,-1}       sign lambda (literal +1 or -1)\n"
          "  --out <path>           write the JSON envelope to a file instead of stdout\n"
          "  --format json          output format (json only)\n"
          "  --grid <preset>        aut-search grid: default | rationals | roots\n"
          "  --s <int> --t <int>    comodule indices for comodule-twist\n"
          "  --aut <descriptor>     psi:<s>:<t>:<xi> | phi:<s>:<t>:<xi> | gamma:<t1>:<t2>:<s> | identity\n"
          "  --seed <int>           recorded in the envelope (reserved for property tests)\n"
          "  --cache-dir <dir>      structure-table cache directory\n"
          "  --max-dim <int>        desk-scale cap on 4*N*n (default 200)\n";
}

bool parse_sign_token(const char* s, int* out) {
    if (std::strcmp(s, "+1") == 0) {
        *out = 1;
        return true;
    }
    if (std::strcmp(s, "-1") == 0) {
        *out = -1;
        return true;
    }
    return false;
}

bool parse_long_token(const char* s, long* out) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (s[used] != '\0') return false;
        *out = v;
        return true;
    } catch (...) {
        return false;
    }
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n\n";
    print_usage(std::cerr);
    return 2;
}

std::optional<Args> parse_args(int argc, char** argv, int* exit_code) {
    Args a;
    if (argc < 2) {
        *exit_code = usage_error("missing command");
        return std::nullopt;
    }
    a.command = argv[1];
    for (int i = 2; i < argc; ++i) {
        std::string flag = argv[i];
        auto need_value = [&](const char* name) -> const char* {
            if (i + 1 >= argc) return nullptr;
            (void)name;
            return argv[++i];
        };
        if (flag == "-N") {
            const char* v = need_value("-N");
            if (!v || !parse_long_token(v, &a.N)) {
                *exit_code = usage_error("-N expects an integer");
                return std::nullopt;
            }
        } else if (flag == "-n") {
            const char* v = need_value("-n");
            if (!v || !parse_long_token(v, &a.n)) {
                *exit_code = usage_error("-n expects an integer");
                return std::nullopt;
            }
        } else if (flag == "--mu") {
            const char* v = need_value("--mu");
            if (!v || !parse_sign_token(v, &a.mu)) {
                *exit_code = usage_error("--mu expects literal +1 or -1");
                return std::nullopt;
            }
        } else if (flag == "--lambda") {
            const char* v = need_value("--lambda");
            if (!v || !parse_sign_token(v, &a.lambda)) {
                *exit_code = usage_error("--lambda expects literal +1 or -1");
                return std::nullopt;
            }
        } else if (flag == "--out") {
            const char* v = need_value("--out");
            if (!v) {
                *exit_code = usage_error("--out expects a path");
                return std::nullopt;
            }
            a.out_path = v;
        } else if (flag == "--format") {
            const char* v = need_value("--format");
            if (!v) {
                *exit_code = usage_error("--format expects a value");
                return std::nullopt;
            }
            a.format = v;
        } else if (flag == "--grid") {
            const char* v = need_value("--grid");
            if (!v) {
                *exit_code = usage_error("--grid expects a preset name");
                return std::nullopt;
            }
            a.grid = v;
        } else if (flag == "--aut") {
            const char* v = need_value("--aut");
            if (!v) {
                *exit_code = usage_error("--aut expects a descriptor");
                return std::nullopt;
            }
            a.aut = v;
        } else if (flag == "--s") {
            const char* v = need_value("--s");
            if (!v || !parse_long_token(v, &a.s)) {
                *exit_code = usage_error("--s expects an integer");
                return std::nullopt;
            }
        } else if (flag == "--t") {
            const char* v = need_value("--t");
            if (!v || !parse_long_token(v, &a.t)) {
                *exit_code = usage_error("--t expects an integer");
                return std::nullopt;
            }
        } else if (flag == "--seed") {
            const char* v = need_value("--seed");
            long seed = 0;
            if (!v || !parse_long_token(v, &seed)) {
                *exit_code = usage_error("--seed expects an integer");
                return std::nullopt;
            }
            a.seed = seed;
        } else if (flag == "--cache-dir") {
            const char* v = need_value("--cache-dir");
            if (!v) {
                *exit_code = usage_error("--cache-dir expects a directory");
                return std::nullopt;
            }
            a.cache_dir = v;
        } else if (flag == "--max-dim") {
            const char* v = need_value("--max-dim");
            if (!v || !parse_long_token(v, &a.max_dim)) {
                *exit_code = usage_error("--max-dim expects an integer");
                return std::nullopt;
            }
        } else if (flag == "--help" || flag == "-h") {
            print_usage(std::cout);
            *exit_code = 0;
            return std::nullopt;
        } else {
            *exit_code = usage_error("unknown flag '" + flag + "'");
            return std::nullopt;
        }
    }
    return a;
}

struct AlgebraHandle {
    suzuki_algebra* ptr = nullptr;
    ~AlgebraHandle() { suzuki_algebra_free(ptr); }
};

struct PayloadString {
    char* ptr = nullptr;
    ~PayloadString() { suzuki_string_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
    int exit_code = 0;
    std::optional<Args> parsed = parse_args(argc, argv, &exit_code);
    if (!parsed) return exit_code;
    Args& a = *parsed;

    static const char* commands[] = {"algebra-build",        "algebra-verify",     "algebra-export",
                                     "coalgebra-grouplikes", "coalgebra-decompose", "comodule-twist",
                                     "aut-list",             "aut-verify",          "aut-table",
                                     "aut-search"};
    bool known = false;
    for (const char* c : commands) known = known || (a.command == c);
    if (!known) return usage_error("unknown command '" + a.command + "'");

    if (a.format != "json") return usage_error("--format supports only 'json'");
    if (a.N < 1) return usage_error("-N must be >= 1");
    if (a.n < 2) return usage_error("-n must be >= 2");
    if (a.mu == 0) return usage_error("--mu is required (+1 or -1)");
    if (a.lambda == 0) return usage_error("--lambda is required (+1 or -1)");
    if (4 * a.N * a.n > a.max_dim)
        return usage_error("dimension 4*N*n exceeds --max-dim (" + std::to_string(a.max_dim) + ")");
    if (a.command == "comodule-twist") {
        if (a.s < 1 || a.t < 1) return usage_error("comodule-twist requires --s and --t");
        if (a.aut.empty()) return usage_error("comodule-twist requires --aut");
    }
    if (a.command == "aut-verify" && a.aut.empty()) return usage_error("aut-verify requires --aut");

    AlgebraHandle alg;
    int rc = suzuki_algebra_create_cached(a.N, a.n, a.mu, a.lambda,
                                          a.cache_dir.empty() ? nullptr : a.cache_dir.c_str(), &alg.ptr);
    if (rc != SUZUKI_OK) {
        std::cerr << "error: " << suzuki_last_error() << "\n";
        return rc == SUZUKI_ERR_INVALID_ARGUMENT ? 2 : 1;
    }

    PayloadString payload;
    if (a.command == "algebra-build") {
        // Tables are built by create; report a summary without dumping them.
        Json p;
        p["ok"] = true;
        p["dim"] = suzuki_algebra_dim(alg.ptr);
        p["conductor"] = suzuki_algebra_conductor(alg.ptr);
        if (!a.cache_dir.empty()) p["cache_dir"] = a.cache_dir;
        payload.ptr = strdup(p.dump(2).c_str());
        rc = SUZUKI_OK;
    } else if (a.command == "algebra-verify") {
        rc = suzuki_algebra_verify(alg.ptr, &payload.ptr);
    } else if (a.command == "algebra-export") {
        rc = suzuki_algebra_export(alg.ptr, &payload.ptr);
    } else if (a.command == "coalgebra-grouplikes") {
        rc = suzuki_grouplikes(alg.ptr, &payload.ptr);
    } else if (a.command == "coalgebra-decompose") {
        rc = suzuki_decompose(alg.ptr, &payload.ptr);
    } else if (a.command == "comodule-twist") {
        rc = suzuki_comodule_twist(alg.ptr, a.s, a.t, a.aut.c_str(), &payload.ptr);
    } else if (a.command == "aut-list") {
        rc = suzuki_aut_list(alg.ptr, &payload.ptr);
    } else if (a.command == "aut-verify") {
        rc = suzuki_aut_verify(alg.ptr, a.aut.c_str(), &payload.ptr);
    } else if (a.command == "aut-table") {
        rc = suzuki_aut_table(alg.ptr, &payload.ptr);
    } else if (a.command == "aut-search") {
        rc = suzuki_aut_search(alg.ptr, a.grid.c_str(), &payload.ptr);
    }

    if (rc != SUZUKI_OK || payload.ptr == nullptr) {
        std::cerr << "error: " << suzuki_last_error() << "\n";
        return rc == SUZUKI_ERR_INVALID_ARGUMENT ? 2 : 1;
    }

    Json envelope;
    envelope["tool_version"] = suzuki_version();
    Json params;
    params["N"] = a.N;
    params["n"] = a.n;
    params["mu"] = (a.mu > 0 ? "+1" : "-1");
    params["lambda"] = (a.lambda > 0 ? "+1" : "-1");
    envelope["params"] = params;
    envelope["command"] = a.command;
    if (a.seed) envelope["seed"] = *a.seed;
    Json body = Json::parse(payload.ptr);
    envelope["payload"] = body;

    std::string text = envelope.dump(2);
    text += "\n";
    if (a.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(a.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << a.out_path << "\n";
            return 1;
        }
        out << text;
    }

    bool ok = body.contains("ok") && body["ok"].is_boolean() && body["ok"].get<bool>();
    return ok ? 0 : 1;
}
