// Command-line front end: exact Motzkin path counts, amplitude
// distributions, mean-amplitude reports, and the cross-method
// verification suite.
//
// Exit codes: 0 success, 1 verification failure (or internal error),
// 2 usage error.

#include "motzkin/motzkin.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

namespace {

using motzkin::Int;

struct OutputRecord {
    unsigned length = 0;
    unsigned height = 0;
    bool horizontal_at_max = false;
    unsigned amplitude = 0;
    std::string count;
};

// nonempty class cells, sorted by (height, horizontal_at_max)
std::vector<OutputRecord> distribution_records(unsigned length) {
    std::vector<OutputRecord> records;
    for (const motzkin::ClassCount& cell : motzkin::class_cells_explicit(length)) {
        if (cell.count == 0)
            continue;
        OutputRecord record;
        record.length = cell.length;
        record.height = cell.height;
        record.horizontal_at_max = cell.horizontal_at_max;
        record.amplitude = 2 * cell.height + (cell.horizontal_at_max ? 1 : 0);
        record.count = cell.count.str();
        records.push_back(std::move(record));
    }
    return records;
}

const char* bool_text(bool value) { return value ? "true" : "false"; }

void print_csv(const std::vector<OutputRecord>& records) {
    std::cout << "length,height,horizontal_at_max,amplitude,count\n";
    for (const OutputRecord& r : records)
        std::cout << r.length << ',' << r.height << ',' << bool_text(r.horizontal_at_max) << ','
                  << r.amplitude << ',' << r.count << '\n';
}

void print_json(unsigned length, const std::vector<OutputRecord>& records) {
    nlohmann::ordered_json doc;
    doc["length"] = length;
    doc["motzkin"] = motzkin::motzkin_number(length).str();
    doc["cells"] = nlohmann::ordered_json::array();
    for (const OutputRecord& r : records) {
        nlohmann::ordered_json cell;
        cell["height"] = r.height;
        cell["horizontal_at_max"] = r.horizontal_at_max;
        cell["amplitude"] = r.amplitude;
        cell["count"] = r.count;
        doc["cells"].push_back(std::move(cell));
    }
    std::cout << doc.dump(2) << '\n';
}

void print_table(const std::vector<OutputRecord>& records, const std::string& group_by) {
    // the grouping key leads; records stay in (height, horizontal_at_max) order
    struct Column {
        std::string header;
        std::vector<std::string> cells;
    };
    std::vector<Column> columns;
    auto add = [&](std::string header, auto value_of) {
        Column column{std::move(header), {}};
        column.cells.reserve(records.size());
        for (const OutputRecord& r : records)
            column.cells.push_back(value_of(r));
        columns.push_back(std::move(column));
    };
    auto amplitude = [](const OutputRecord& r) { return std::to_string(r.amplitude); };
    auto height = [](const OutputRecord& r) { return std::to_string(r.height); };
    auto horizontal = [](const OutputRecord& r) { return std::string(bool_text(r.horizontal_at_max)); };
    auto klass = [](const OutputRecord& r) {
        return std::string(r.horizontal_at_max ? "horizontal" : "no-horizontal");
    };
    auto count = [](const OutputRecord& r) { return r.count; };

    if (group_by == "amplitude") {
        add("amplitude", amplitude);
        add("height", height);
        add("horizontal_at_max", horizontal);
    } else if (group_by == "height") {
        add("height", height);
        add("horizontal_at_max", horizontal);
        add("amplitude", amplitude);
    } else { // class
        add("class", klass);
        add("height", height);
        add("amplitude", amplitude);
    }
    add("count", count);

    for (Column& column : columns) {
        std::size_t width = column.header.size();
        for (const std::string& cell : column.cells)
            width = std::max(width, cell.size());
        column.header.resize(width, ' ');
        for (std::string& cell : column.cells)
            cell.resize(width, ' ');
    }
    auto print_row = [&](auto field) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            std::cout << (i ? "  " : "") << field(columns[i]);
        std::cout << '\n';
    };
    print_row([](const Column& c) { return c.header; });
    for (std::size_t r = 0; r < records.size(); ++r)
        print_row([&](const Column& c) { return c.cells[r]; });
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.10g", value);
    return buffer;
}

int cmd_count(unsigned length) {
    std::cout << motzkin::motzkin_number(length).str() << '\n';
    return 0;
}

int cmd_distribution(unsigned length, const std::string& group_by, const std::string& format) {
    const std::vector<OutputRecord> records = distribution_records(length);
    if (format == "csv")
        print_csv(records);
    else if (format == "json")
        print_json(length, records);
    else
        print_table(records, group_by);
    return 0;
}

int cmd_mean_amplitude(unsigned length) {
    if (length == 0) {
        // the empty path is the only length-0 path; its amplitude is 0 and
        // there is no meaningful asymptotic comparison
        std::cout << "mean amplitude: 0\nratio: n/a\n";
        return 0;
    }
    const motzkin::AsymptoticReport report =
        motzkin::asymptotic_report(length, motzkin::Quantity::mean_amplitude);
    std::cout << "mean amplitude: ";
    if (denominator(report.exact_value) == 1)
        std::cout << numerator(report.exact_value).str() << '\n';
    else
        std::cout << numerator(report.exact_value).str() << '/'
                  << denominator(report.exact_value).str() << " ≈ "
                  << motzkin::decimal_string(report.exact_value, 10) << '\n';
    std::cout << "asymptotic 2*sqrt(pi*n/3): " << format_double(report.asymptotic_value) << '\n';
    std::cout << "ratio: " << format_double(report.ratio) << '\n';
    return 0;
}

int cmd_verify(unsigned max_length, unsigned brute_max) {
    motzkin::VerificationOptions options;
    options.max_length = max_length;
    options.brute_max = brute_max;
    options.log = &std::cerr;
    const motzkin::VerificationReport report = motzkin::run_verification(options);
    if (report.passed) {
        std::cout << "PASS (" << report.checks << " cells checked)\n";
        return 0;
    }
    std::cout << "FAIL: " << report.first_failure << '\n';
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of Motzkin paths by height and amplitude"};
    app.require_subcommand(1);

    unsigned length = 0;
    std::string group_by = "amplitude";
    std::string format = "table";
    unsigned max_length = 0;
    unsigned brute_max = 12;

    CLI::App* count = app.add_subcommand("count", "Print the Motzkin number for a length");
    count->add_option("--length", length, "path length")->required();

    CLI::App* distribution =
        app.add_subcommand("distribution", "Class cells of a length, as table, JSON, or CSV");
    distribution->add_option("--length", length, "path length")->required();
    distribution->add_option("--group-by", group_by, "leading key: amplitude, height, or class")
        ->check(CLI::IsMember({"amplitude", "height", "class"}));
    distribution->add_option("--format", format, "output format: table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    CLI::App* mean =
        app.add_subcommand("mean-amplitude", "Exact mean amplitude with its asymptotic law");
    mean->add_option("--length", length, "path length")->required();

    CLI::App* verify =
        app.add_subcommand("verify", "Cross-check all counting routes against each other");
    verify->add_option("--max-length", max_length, "verify every length up to this bound")
        ->required();
    verify->add_option("--brute-max", brute_max,
                       "brute-force enumeration bound (clamped to 16)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*count)
            return cmd_count(length);
        if (*distribution)
            return cmd_distribution(length, group_by, format);
        if (*mean)
            return cmd_mean_amplitude(length);
        if (*verify)
            return cmd_verify(max_length, brute_max);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
