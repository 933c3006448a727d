#ifndef LIECLASS_REPORT_HPP
#define LIECLASS_REPORT_HPP

#include "lieclass/parse.hpp"

#include <map>
#include <string>
#include <vector>

namespace lieclass {

// Exit statuses shared by the library-level runner and the CLI.
enum ExitStatus {
    ExitOk = 0,
    ExitParseError = 2,
    ExitUnsupported = 3,   // nonlinear input, class mismatch, unstraightened char
    ExitIncompatible = 4,
    ExitResidual = 5,      // ReducedToODE or quadrature residual
};

struct RunOptions {
    unsigned depth = 10;        // classic
    int kappa = -1;             // zoo --kappa n
    int upto = -1;              // zoo --upto N
    bool trace = false;         // include the pipeline kappa-trace
    std::string func_name = "f";
};

// The report is the JSON document; the human rendering is produced from the
// same structure, never from a separate code path. Field names are frozen in
// docs/format.md.
struct Report {
    int exit_status = ExitOk;
    std::string json;   // serialized JSON document
    std::string human;  // text rendering of the same data
};

Report run(const std::string& command, const InputDocument& doc, const RunOptions& opts);
// zoo needs no input document
Report run_zoo(const RunOptions& opts);

}  // namespace lieclass

#endif
