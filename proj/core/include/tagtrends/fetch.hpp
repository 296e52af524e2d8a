#pragma once

#include <stdexcept>
#include <string>

namespace tagtrends {

// Transient transport failure; the caller may retry.
class FetchRetryableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-2xx response; carries the status code.
class FetchFatalError : public std::runtime_error {
public:
    FetchFatalError(int status, const std::string& msg)
        : std::runtime_error(msg), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

// Downloads `url` and stores the body under cache_dir as
// dump-<sha256 of body>.bin. An existing entry with the same content hash is
// reused; cache entries are never mutated. Returns the cached file path.
std::string fetch_remote(const std::string& url, const std::string& cache_dir);

} // namespace tagtrends
