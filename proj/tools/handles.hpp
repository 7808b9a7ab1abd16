#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "tribodyn/tribodyn.h"

namespace tribodyn_cli {

template <class T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};

using Inits = std::unique_ptr<tribodyn_inits, HandleDeleter<tribodyn_inits, tribodyn_inits_free>>;
using InitsList =
    std::unique_ptr<tribodyn_inits_list, HandleDeleter<tribodyn_inits_list, tribodyn_inits_list_free>>;
using Trajectory =
    std::unique_ptr<tribodyn_trajectory, HandleDeleter<tribodyn_trajectory, tribodyn_trajectory_free>>;
using Equivalence = std::unique_ptr<tribodyn_equivalence,
                                    HandleDeleter<tribodyn_equivalence, tribodyn_equivalence_free>>;

/// A failed C API call, carrying its status and message.
class ApiError : public std::runtime_error {
 public:
  ApiError(tribodyn_status status, const std::string& context)
      : std::runtime_error(context + ": " + tribodyn_last_error()), status_(status) {}

  tribodyn_status status() const noexcept { return status_; }

 private:
  tribodyn_status status_;
};

inline void check(tribodyn_status status, const std::string& context) {
  if (status != TRIBODYN_OK) throw ApiError(status, context);
}

/// Takes ownership of a string returned by the C API.
inline std::string take(char* s) {
  std::string out = s ? s : "";
  tribodyn_string_free(s);
  return out;
}

}  // namespace tribodyn_cli
