#include "usched/io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "usched/errors.hpp"

namespace usched {

namespace {

// Parses a whole token as an integer, or fails with the line number.
long long to_int(const std::string& token, int line, const char* what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || token.empty())
        throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + token + "'");
    return v;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::string text;
    int line_no = 0;
    std::optional<int> n, m, deadline;
    std::vector<Arc> arcs;
    while (std::getline(in, text)) {
        ++line_no;
        std::istringstream ls(text);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        std::vector<std::string> fields;
        for (std::string f; ls >> f;) fields.push_back(f);
        if (tag == "p") {
            if (n) throw ParseError(line_no, "second header line");
            if (fields.size() < 3 || fields.size() > 4 || fields[0] != "usched")
                throw ParseError(line_no, "header must be 'p usched <n> <m> [T]'");
            long long nv = to_int(fields[1], line_no, "n");
            long long mv = to_int(fields[2], line_no, "m");
            if (nv < 0 || nv > 1'000'000) throw ParseError(line_no, "job count out of range");
            if (mv < 1 || mv > 1'000'000) throw ParseError(line_no, "machine count must be positive");
            n = static_cast<int>(nv);
            m = static_cast<int>(mv);
            if (fields.size() == 4) {
                long long tv = to_int(fields[3], line_no, "T");
                if (tv < 0 || tv > 1'000'000) throw ParseError(line_no, "deadline must be nonnegative");
                deadline = static_cast<int>(tv);
            }
        } else if (tag == "a") {
            if (!n) throw ParseError(line_no, "arc before the header line");
            if (fields.size() != 2) throw ParseError(line_no, "arc line must be 'a <u> <v>'");
            long long u = to_int(fields[0], line_no, "u");
            long long v = to_int(fields[1], line_no, "v");
            if (u < 1 || u > *n || v < 1 || v > *n) throw ParseError(line_no, "job index out of range");
            if (u == v) throw ParseError(line_no, "self-arc on job " + std::to_string(u));
            arcs.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
        } else {
            throw ParseError(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (!n) throw ParseError(line_no, "missing header line");
    try {
        return Instance::create(*n, *m, arcs, deadline);
    } catch (const InstanceError& e) {
        throw ParseError(line_no, e.what());
    }
}

Instance parse_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_instance(in);
}

Instance parse_instance_string(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

void emit_instance(const Instance& inst, std::ostream& out) {
    out << "p usched " << inst.job_count() << ' ' << inst.machine_count();
    if (inst.deadline()) out << ' ' << *inst.deadline();
    out << '\n';
    for (const Arc& a : inst.arcs()) out << "a " << a.from + 1 << ' ' << a.to + 1 << '\n';
}

void emit_instance_file(const Instance& inst, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    emit_instance(inst, out);
}

std::string emit_instance_string(const Instance& inst) {
    std::ostringstream out;
    emit_instance(inst, out);
    return out.str();
}

void write_schedule(const Schedule& sched, std::ostream& out) {
    for (int t = 0; t < sched.makespan(); ++t) {
        out << t + 1 << ':';
        for (int v : sched.slots[t]) out << ' ' << v + 1;
        out << '\n';
    }
}

Schedule parse_schedule(std::istream& in) {
    Schedule sched;
    std::string text;
    int line_no = 0;
    while (std::getline(in, text)) {
        ++line_no;
        std::istringstream ls(text);
        std::string head;
        if (!(ls >> head) || head == "c") continue;
        if (head.back() != ':') throw ParseError(line_no, "slot line must start with 't:'");
        long long t = to_int(head.substr(0, head.size() - 1), line_no, "slot");
        if (t != sched.makespan() + 1) throw ParseError(line_no, "slots must be numbered 1, 2, ... in order");
        std::vector<int> slot;
        for (std::string f; ls >> f;) {
            long long j = to_int(f, line_no, "job");
            if (j < 1 || j > 1'000'000) throw ParseError(line_no, "job index out of range");
            slot.push_back(static_cast<int>(j - 1));
        }
        sched.slots.push_back(std::move(slot));
    }
    return sched;
}

}  // namespace usched
