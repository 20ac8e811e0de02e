/*
   Copyright 2026 The nsatz authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "sysio.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nsatz::io {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        lines.push_back(t);
    }
    return lines;
}

std::vector<std::string> parse_vars_header(const std::string& line) {
    if (line.rfind("vars:", 0) != 0)
        throw Error("expected a 'vars:' header line, got '" + line + "'");
    std::vector<std::string> vars;
    std::string rest = line.substr(5);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        std::size_t comma = rest.find(',', pos);
        std::string name = trim(comma == std::string::npos ? rest.substr(pos)
                                                           : rest.substr(pos, comma - pos));
        if (name.empty()) throw Error("empty variable name in 'vars:' header");
        vars.push_back(name);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return vars;
}

}  // namespace

certify::PolySystem parse_system(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw Error("empty system file");
    certify::PolySystem system;
    system.vars = parse_vars_header(lines[0]);
    for (std::size_t i = 1; i < lines.size(); ++i)
        system.gens.push_back(parse_poly(lines[i], system.vars));
    if (system.gens.empty()) throw Error("system file declares no generators");
    return system;
}

certify::PolySystem read_system_file(const std::string& path) {
    return parse_system(read_file(path));
}

std::string format_system(const certify::PolySystem& system) {
    std::ostringstream out;
    out << "vars:";
    for (std::size_t i = 0; i < system.vars.size(); ++i)
        out << (i ? "," : " ") << system.vars[i];
    out << "\n";
    for (const Poly& g : system.gens) out << format_poly(g, system.vars) << "\n";
    return out.str();
}

std::string format_certificate(const certify::Certificate& cert,
                               const std::vector<std::string>& vars) {
    std::ostringstream out;
    out << "vars:";
    for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? "," : " ") << vars[i];
    out << "\n";
    out << "a = " << cert.multiplier.get_str() << "\n";
    out << "cap = " << cert.degree_cap_used << "\n";
    for (const Poly& h : cert.cofactors) out << format_poly(h, vars) << "\n";
    return out.str();
}

certify::Certificate parse_certificate(const std::string& text,
                                       const certify::PolySystem& system) {
    auto lines = content_lines(text);
    if (lines.size() < 3) throw Error("certificate file too short");
    auto vars = parse_vars_header(lines[0]);
    if (vars != system.vars)
        throw Error("certificate variables do not match the system");
    if (lines[1].rfind("a =", 0) != 0) throw Error("expected 'a = <integer>' line");
    if (lines[2].rfind("cap =", 0) != 0) throw Error("expected 'cap = <k>' line");

    certify::Certificate cert;
    cert.target = Poly::constant(system.nvars(), Rat(1));
    std::string a_text = trim(lines[1].substr(3));
    cert.multiplier = Int(a_text);
    if (cert.multiplier == 0) throw Error("certificate multiplier must be nonzero");
    cert.degree_cap_used = std::stol(trim(lines[2].substr(5)));

    for (std::size_t i = 3; i < lines.size(); ++i)
        cert.cofactors.push_back(parse_poly(lines[i], system.vars));
    if (cert.cofactors.size() != system.gens.size())
        throw Error("certificate has " + std::to_string(cert.cofactors.size()) +
                    " cofactors for " + std::to_string(system.gens.size()) +
                    " generators");
    return cert;
}

certify::Certificate read_certificate_file(const std::string& path,
                                           const certify::PolySystem& system) {
    return parse_certificate(read_file(path), system);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw Error("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string csv_escape(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ",";
        out += csv_escape(fields[i]);
    }
    out += "\n";
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string kps_sweep_csv(const std::vector<certify::KpsSweepRow>& rows) {
    std::string out = csv_row({"instance_id", "n", "D", "H", "s", "cap_used", "deg_max",
                               "log_h_a", "log_h_cofactors_max", "kps_deg_bound",
                               "kps_height_bound", "deg_ok", "height_ok"});
    for (const auto& r : rows) {
        out += csv_row({std::to_string(r.instance_id), std::to_string(r.n),
                        std::to_string(r.D), format_double(r.H), std::to_string(r.s),
                        std::to_string(r.cap_used), std::to_string(r.deg_max),
                        format_double(r.log_h_a), format_double(r.log_h_cofactors_max),
                        std::to_string(r.kps_deg_bound),
                        format_double(r.kps_height_bound), r.deg_ok ? "1" : "0",
                        r.height_ok ? "1" : "0"});
    }
    return out;
}

}  // namespace nsatz::io
