#include "tdga/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tdga/errors.hpp"

namespace tdga {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_number(std::string_view token, std::string_view what) {
  token = trim(token);
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

/// Next line that is neither blank nor a comment; throws ParseError at end of input.
std::string next_line(std::istream& is, std::string_view what) {
  std::string line;
  while (std::getline(is, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    return std::string(t);
  }
  throw ParseError("unexpected end of input, expected " + std::string(what));
}

AlgebraElement read_element(std::istream& is, const AlgebraParams& params, std::string_view what) {
  const auto values = parse_tuple(next_line(is, what));
  if (values.size() != 2 * params.n()) {
    throw ParseError(std::string(what) + ": expected " + std::to_string(2 * params.n()) + " entries, got " +
                     std::to_string(values.size()));
  }
  for (auto v : values) {
    if (v >= params.q()) throw ParseError(std::string(what) + ": entry " + std::to_string(v) + " is not below q");
  }
  return AlgebraElement::from_tuple(params, values);
}

void expect_header(std::istream& is, const PublicParams& params) {
  const FileHeader header = parse_header(next_line(is, "header"));
  const FileHeader expected{params.algebra.q(), params.algebra.n(), params.algebra.lambda().value()};
  if (header != expected) throw ParseError("key file header does not match the public parameters");
}

}  // namespace

std::string format_tuple(std::span<const std::uint64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_element(const AlgebraElement& u) { return format_tuple(u.to_tuple()); }

std::vector<std::uint64_t> parse_tuple(std::string_view line) {
  line = trim(line);
  if (!line.empty() && line.front() == '(') {
    if (line.back() != ')') throw ParseError("unbalanced parenthesis in tuple");
    line = trim(line.substr(1, line.size() - 2));
  }
  if (line.empty()) throw ParseError("empty tuple");
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(parse_number(line.substr(start, comma == std::string_view::npos ? comma : comma - start),
                               "tuple entry"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_header(const AlgebraParams& params) {
  return "q=" + std::to_string(params.q()) + " n=" + std::to_string(params.n()) +
         " lambda=" + std::to_string(params.lambda().value());
}

FileHeader parse_header(std::string_view line) {
  FileHeader header;
  bool seen_q = false, seen_n = false, seen_lambda = false;
  std::istringstream tokens{std::string(line)};
  std::string token;
  while (tokens >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("header token '" + token + "' is not key=value");
    const std::string key = token.substr(0, eq);
    const std::string_view value = std::string_view(token).substr(eq + 1);
    if (key == "q") {
      header.q = parse_number(value, "q");
      seen_q = true;
    } else if (key == "n") {
      header.n = parse_number(value, "n");
      seen_n = true;
    } else if (key == "lambda") {
      header.lambda = parse_number(value, "lambda");
      seen_lambda = true;
    } else {
      throw ParseError("unknown header key '" + key + "'");
    }
  }
  if (!seen_q || !seen_n || !seen_lambda) throw ParseError("header must give q, n and lambda");
  return header;
}

AlgebraParams algebra_from_header(const FileHeader& header) {
  try {
    if (header.lambda >= header.q) throw std::invalid_argument("lambda is not below q");
    return AlgebraParams(header.q, header.n, header.lambda);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid parameters in header: ") + e.what());
  }
}

void write_params(std::ostream& os, const PublicParams& params) {
  os << format_header(params.algebra) << '\n' << format_element(params.h) << '\n';
}

PublicParams read_params(std::istream& is) {
  const AlgebraParams algebra = algebra_from_header(parse_header(next_line(is, "header")));
  AlgebraElement h = read_element(is, algebra, "public element h");
  try {
    return PublicParams(algebra, std::move(h));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void write_public_key(std::ostream& os, const PublicParams& params, const PublicKey& pk) {
  os << format_header(params.algebra) << '\n' << format_element(pk.pk) << '\n';
}

PublicKey read_public_key(std::istream& is, const PublicParams& params) {
  expect_header(is, params);
  return {read_element(is, params.algebra, "public key")};
}

void write_secret_key(std::ostream& os, const PublicParams& params, const SecretKey& sk) {
  os << format_header(params.algebra) << '\n' << format_element(sk.s) << '\n' << format_element(sk.t) << '\n';
}

SecretKey read_secret_key(std::istream& is, const PublicParams& params) {
  expect_header(is, params);
  AlgebraElement s = read_element(is, params.algebra, "secret s");
  AlgebraElement t = read_element(is, params.algebra, "secret t");
  try {
    return SecretKey(std::move(s), std::move(t));
  } catch (const SupportViolation& e) {
    throw ParseError(e.what());
  }
}

WorkedExample read_worked_example(std::istream& is) {
  const AlgebraParams algebra = algebra_from_header(parse_header(next_line(is, "header")));
  AlgebraElement h = read_element(is, algebra, "h");
  AlgebraElement s = read_element(is, algebra, "s");
  AlgebraElement t = read_element(is, algebra, "t");
  AlgebraElement s_tilde = read_element(is, algebra, "s~");
  AlgebraElement t_tilde = read_element(is, algebra, "t~");
  return {algebra, std::move(h), std::move(s), std::move(t), std::move(s_tilde), std::move(t_tilde)};
}

}  // namespace tdga
