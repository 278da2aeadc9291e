#pragma once

// Runs prelie-coh on the case table in golden/cases.tsv. Captured output is
// stdout followed by stderr, with the fixture directory shown as "@".

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace prelie::golden {

inline const std::string kCli = PRELIE_CLI_PATH;
inline const std::string kGolden = PRELIE_GOLDEN_DIR;
inline const std::string kFixtures = PRELIE_FIXTURE_DIR;

struct Case {
    std::string name;
    int exit_code = 0;
    std::vector<std::string> args;
};

inline std::vector<Case> load_cases() {
    std::ifstream in(kGolden + "/cases.tsv");
    std::vector<Case> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, '\t'))
            fields.push_back(f);
        Case c{fields.at(0), std::stoi(fields.at(1)), {}};
        for (std::size_t k = 2; k < fields.size(); ++k)
            c.args.push_back(fields[k][0] == '@' ? kFixtures + "/" + fields[k].substr(1) : fields[k]);
        out.push_back(std::move(c));
    }
    return out;
}

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char ch : s)
        out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    return out + "'";
}

struct RunResult {
    std::string out;
    int exit_code = -1;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size()))
        s.replace(p, from.size(), to);
    return s;
}

inline RunResult run(const Case& c) {
    const std::string err_path = (std::filesystem::temp_directory_path() /
                                  ("prelie_golden_" + c.name + "_" + std::to_string(getpid())))
                                     .string();
    std::string cmd = shell_quote(kCli);
    for (const auto& a : c.args)
        cmd += " " + shell_quote(a);
    cmd += " 2>" + shell_quote(err_path);
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {};
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    const std::string err = read_file(err_path);
    std::filesystem::remove(err_path);
    if (!err.empty())
        r.out += "--- stderr ---\n" + replace_all(err, kFixtures + "/", "@");
    return r;
}

/// Test parameter printer, so test names stay readable.
inline void PrintTo(const Case& c, std::ostream* os) { *os << c.name; }

inline std::string golden_path(const Case& c) { return kGolden + "/" + c.name + ".out"; }

} // namespace prelie::golden
