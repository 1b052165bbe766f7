"""String utilities."""


def slugify(text):
    out = []
    for ch in text.lower():
        if ch.isalnum():
            out.append(ch)
        elif out and out[-1] != "-":
            out.append("-")
    return "".join(out).strip("-")


def truncate(text, limit, suffix="..."):
    if len(text) <= limit:
        return text
    return text[: max(0, limit - len(suffix))] + suffix


def count_words(text):
    return len([w for w in text.split() if w])


def is_palindrome(text):
    cleaned = [c for c in text.lower() if c.isalnum()]
    return cleaned == cleaned[::-1]
