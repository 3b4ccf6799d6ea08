#pragma once

#include <string>
#include <string_view>

#include "minmax/permutation.hpp"
#include "minmax/profile.hpp"

namespace minmax::cli {

// Profile document:
//
//   minmax-profile 1
//   n <int>
//   k <int>
//   directed <0|1>
//   <t> <gap> <dir> <min> <max>     one per (t, gap); dir is '>', '<' or '?'
//
// Fields are whitespace separated and '#' starts a comment. The canonical
// form (what emit_profile writes) has single spaces, no comments, and the
// entries ordered by gap then t.

/// Throws Error{SyntaxError} with a line number for grammar problems, and
/// Error{InvalidProfile} when the parsed profile fails validate_profile.
Profile parse_profile(std::string_view text);

/// Same grammar, without the validate_profile gate.
Profile parse_profile_unchecked(std::string_view text);

std::string emit_profile(const Profile& f);

/// One line of whitespace-separated integers including 0 and n+1.
Permutation parse_permutation(std::string_view text);
std::string emit_permutation(const Permutation& p);

}  // namespace minmax::cli
