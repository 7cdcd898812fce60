#pragma once

// Plain-text formats.
//
// An algebra element is one line of 2n comma-separated decimal residues,
// a_0..a_{n-1} then b_0..b_{n-1}. Files start with the header line
// "q=<q> n=<n> lambda=<lambda>" followed by one element per line:
//
//   params file      h
//   public key file  pk
//   secret key file  s, t
//   example file     h, s, t, s~, t~
//
// Readers skip blank lines and lines starting with '#'. Writers emit neither.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tdga/protocol.hpp"
#include "tdga/twisted_algebra.hpp"

namespace tdga {

std::string format_tuple(std::span<const std::uint64_t> values);
std::string format_element(const AlgebraElement& u);
/// Accepts surrounding parentheses and whitespace around entries. Throws ParseError.
std::vector<std::uint64_t> parse_tuple(std::string_view line);

struct FileHeader {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::uint64_t lambda = 0;

  friend bool operator==(const FileHeader&, const FileHeader&) = default;
};

std::string format_header(const AlgebraParams& params);
/// Throws ParseError.
FileHeader parse_header(std::string_view line);
/// Throws ParseError if the header does not describe valid algebra parameters.
AlgebraParams algebra_from_header(const FileHeader& header);

void write_params(std::ostream& os, const PublicParams& params);
PublicParams read_params(std::istream& is);

void write_public_key(std::ostream& os, const PublicParams& params, const PublicKey& pk);
/// Throws ParseError if the file's header disagrees with params.
PublicKey read_public_key(std::istream& is, const PublicParams& params);

void write_secret_key(std::ostream& os, const PublicParams& params, const SecretKey& sk);
SecretKey read_secret_key(std::istream& is, const PublicParams& params);

/// A published instance: public element, original key, and a recovered key.
struct WorkedExample {
  AlgebraParams algebra;
  AlgebraElement h;
  AlgebraElement s;
  AlgebraElement t;
  AlgebraElement s_tilde;
  AlgebraElement t_tilde;
};

WorkedExample read_worked_example(std::istream& is);

}  // namespace tdga
