#pragma once

#include <stdexcept>
#include <string>

namespace nakayama
{

// Base class of every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class empty_series : public error
{
public:
    empty_series() : error("empty Kupisch series") {}
};

// The Kupisch series violates an admissibility constraint; index is 1-based.
class not_admissible : public error
{
public:
    not_admissible(int index, const std::string &constraint)
        : error("Kupisch series not admissible at index " + std::to_string(index) + ": " + constraint),
          index_(index), constraint_(constraint)
    {
    }

    int index() const noexcept { return index_; }
    const std::string &constraint() const noexcept { return constraint_; }

private:
    int index_;
    std::string constraint_;
};

class not_gorenstein : public error
{
public:
    using error::error;
};

// id of the regular module is finite on exactly one side, or the two finite values differ.
class gorenstein_asymmetry : public error
{
public:
    using error::error;
};

class internal_inconsistency : public error
{
public:
    using error::error;
};

class precondition_failed : public error
{
public:
    using error::error;
};

class search_space_too_large : public error
{
public:
    using error::error;
};

class dimension_cap_exceeded : public error
{
public:
    using error::error;
};

class parse_error : public error
{
public:
    using error::error;
};

class invalid_module : public error
{
public:
    using error::error;
};

} // namespace nakayama
