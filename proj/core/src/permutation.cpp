#include "minmax/permutation.hpp"

#include <sstream>

#include "minmax/error.hpp"

namespace minmax {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotBijection: return "NotBijection";
    case ErrorCode::BadEndpoints: return "BadEndpoints";
    case ErrorCode::MalformedProfile: return "MalformedProfile";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::MismatchedN: return "MismatchedN";
    case ErrorCode::KMismatch: return "KMismatch";
    case ErrorCode::COutOfRange: return "COutOfRange";
    case ErrorCode::NotDirected: return "NotDirected";
    case ErrorCode::NotUndirected: return "NotUndirected";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

Permutation::Permutation(std::vector<int> elems) : elems_(std::move(elems)), positions_(elems_.size()) {
  for (int i = 0; i < size(); ++i) positions_[elems_[i]] = i;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ' ';
    os << elems_[i];
  }
  return os.str();
}

Permutation Permutation::identity(int n) {
  std::vector<int> seq(n + 2);
  std::iota(seq.begin(), seq.end(), 0);
  return validate_permutation(std::move(seq));
}

Permutation validate_permutation(std::vector<int> seq) {
  const int len = static_cast<int>(seq.size());
  if (len < 3) {
    throw Error(ErrorCode::NotBijection, "a permutation needs n >= 1, i.e. at least 3 elements");
  }
  std::vector<bool> seen(len, false);
  for (int v : seq) {
    if (v < 0 || v >= len) {
      throw Error(ErrorCode::NotBijection, "value " + std::to_string(v) + " outside 0.." + std::to_string(len - 1));
    }
    if (seen[v]) throw Error(ErrorCode::NotBijection, "value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  if (seq.front() != 0 || seq.back() != len - 1) {
    throw Error(ErrorCode::BadEndpoints,
                "expected 0 first and " + std::to_string(len - 1) + " last");
  }
  return Permutation(std::move(seq));
}

Permutation complement_reverse(const Permutation& p) {
  const int last = p.size() - 1;
  std::vector<int> seq(p.size());
  for (int j = 0; j <= last; ++j) seq[j] = last - p.at(last - j);
  return validate_permutation(std::move(seq));
}

}  // namespace minmax
