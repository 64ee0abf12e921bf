#pragma once

#include <rolecol/role_colouring.hh>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rolecol {

// Colouring certificate format:
//   c <comment>
//   v <vertex> <colour>     (both 1-based, one line per vertex)
//   c role                  (optional; graph-format lines of the role graph follow)
// Several certificates in one file are separated by "c solution <i>" lines.

struct Certificate {
    RoleColouring colouring;
    std::optional<RoleGraph> role;
};

void write_certificate(std::ostream &out, const Certificate &cert, const std::vector<std::string> &comments = {});

/// Reads the first certificate of a stream. Every vertex 1..n must appear
/// exactly once, where n is the largest vertex mentioned.
Certificate read_certificate(std::istream &in);
Certificate read_certificate_file(const std::string &path);

} // namespace rolecol
