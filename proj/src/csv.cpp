#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <system_error>

#include "zeno/error.hpp"
#include "zeno/report.hpp"

namespace zeno {

namespace {

constexpr const char* kTraceHeader = "t,p1,p2,p3,W";

double parse_field(const std::string& field, std::size_t line) {
    if (field.empty()) throw InvalidInput("empty field on CSV line " + std::to_string(line));
    char* end = nullptr;
    errno = 0;
    const double x = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size() || errno == ERANGE)
        throw InvalidInput("bad number '" + field + "' on CSV line " + std::to_string(line));
    return x;
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_trace_csv(const SimulationTrace& trace) {
    std::string out = kTraceHeader;
    out += '\n';
    for (const auto& s : trace.samples) {
        if (s.populations.size() != 2 && s.populations.size() != 3)
            throw InvalidInput("trace CSV holds two- or three-level populations only");
        const double p3 = s.populations.size() == 3 ? s.populations[2] : 0.0;
        out += format_double(s.time);
        for (double x : {s.populations[0], s.populations[1], p3, s.survival}) {
            out += ',';
            out += format_double(x);
        }
        out += '\n';
    }
    return out;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing: " + std::strerror(errno));
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw IoError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw IoError("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

void emit_trace_csv(const SimulationTrace& trace, const std::filesystem::path& path) {
    write_file_atomically(path, format_trace_csv(trace));
}

SimulationTrace parse_trace_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kTraceHeader) throw InvalidInput("trace CSV must start with " + std::string(kTraceHeader));

    SimulationTrace trace;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<double> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(parse_field(field, lineno));
        if (fields.size() != 5) throw InvalidInput("trace CSV line " + std::to_string(lineno) + " needs 5 fields");
        trace.samples.push_back({fields[0], {fields[1], fields[2], fields[3]}, fields[4]});
    }
    return trace;
}

SimulationTrace read_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_trace_csv(buffer.str());
}

std::string format_sweep_csv(const SweepResult& result) {
    std::string out = "axis_value,w_zeno,w_no_zeno,w_tunnel\n";
    auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(); };
    for (const auto& p : result.points) {
        out += format_double(p.axis_value) + ',' + opt(p.record.w_zeno) + ',' + opt(p.record.w_no_zeno) + ',' +
               opt(p.record.w_tunnel) + '\n';
    }
    return out;
}

}  // namespace zeno
