"""Synthetic fixtures: 100 strings carrying PII, 100 without any."""

_EMAILS = [
    "john.doe@example.com", "jane_smith99@mail.co.uk", "a.b+tag@sub.domain.org",
    "UPPER.CASE@EXAMPLE.NET", "x@y.io", "first-last@company-name.com",
    "user%x@host.museum", "nums123@web.de", "dot.ted.name@edu.au",
    "weird_+-%@ok-host.com",
]

_IPV4S = [
    "192.168.0.1", "10.0.0.254", "8.8.8.8", "172.16.31.7", "255.255.255.255",
    "1.2.3.4", "127.0.0.1", "203.0.113.99", "198.51.100.23", "100.64.1.2",
]

_IPV6S = [
    "2001:db8:85a3:0:0:8a2e:370:7334", "fe80::1", "::1",
    "2001:db8::8a2e:370:7334", "ff02::fb", "2001:0db8:0000:0000:0000:ff00:0042:8329",
    "fd12:3456:789a:1::1", "abcd:ef01:2345:6789:abcd:ef01:2345:6789",
    "2606:4700:4700::1111", "64:ff9b::203.0.113.4".replace("203.0.113.4", "a00"),
]

_PHONES = [
    "+14155552671", "+44 20 7946 0958", "(555) 123-4567", "555-123-4567",
    "+1 (800) 555-0199", "020 7946 0958", "415.555.2671", "+91 98765 43210",
    "1-800-555-0123", "+86 10 6552 9988",
]

_IDS = [
    "1234567890123456", "9999-8888-7777-6666", "12345678901234567",
    "4111111111111111", "378282246310005", "6011000990139424",
    "123456789012345678", "98765432109876", "55554444333322221111",
    "1111-2222-3333-4444",
]

_TEMPLATES = [
    "contact me at {} if interested",
    "leaked: {}",
    "the record lists {} as primary contact",
    "{} appeared in the server logs",
    "please forward this to {} asap",
    "found {} in the dump",
    "credentials for {} were rotated",
    "ticket opened by {}",
    "user {} reported the outage",
    "archived message from {}",
]


def pii_strings():
    values = _EMAILS + _IPV4S + _IPV6S + _PHONES + _IDS
    out = []
    for i, value in enumerate(values * 2):
        out.append(_TEMPLATES[i % len(_TEMPLATES)].format(value))
    return out[:100]


_CLEAN = [
    "the quick brown fox jumps over the lazy dog",
    "meeting moved to tuesday at 3pm",
    "we shipped version 2 of the parser",
    "chapter 7 covers inverted indices",
    "the score was 3 to 1 after overtime",
    "room 101 is down the hall",
    "she bought 12 apples and 5 pears",
    "the train departs at 09:45",
    "highway 66 runs west",
    "temperature reached 38 degrees",
    "pi is roughly 3.14159",
    "the invoice totals 249.99 euros",
    "see figure 4 for details",
    "we counted 1,024 entries in the log",
    "his marathon time was 3:59:58",
    "the recipe needs 250 g of flour",
    "apartment 4b has a balcony",
    "page 312 of the manual",
    "a dozen means 12",
    "build 47 fixed the regression",
]


def clean_strings():
    out = []
    for i in range(100):
        base = _CLEAN[i % len(_CLEAN)]
        out.append(base if i < len(_CLEAN) else f"{base} (rev {i % 7})")
    return out
