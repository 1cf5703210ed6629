// Right-to-left text handling: Arabic lemmas must render RTL inside the
// otherwise LTR interface, and mixed strings need bidi isolation so that
// punctuation does not jump around.

const RTL_RANGES: ReadonlyArray<readonly [number, number]> = [
  [0x0590, 0x05ff], // Hebrew
  [0x0600, 0x06ff], // Arabic
  [0x0750, 0x077f], // Arabic Supplement
  [0x08a0, 0x08ff], // Arabic Extended-A
  [0xfb1d, 0xfb4f], // Hebrew presentation forms
  [0xfb50, 0xfdff], // Arabic presentation forms A
  [0xfe70, 0xfeff], // Arabic presentation forms B
];

export function isRtlChar(char: string): boolean {
  const code = char.codePointAt(0);
  if (code === undefined) return false;
  return RTL_RANGES.some(([lo, hi]) => code >= lo && code <= hi);
}

/** Direction of the first strong character; neutral text counts as LTR. */
export function textDirection(text: string): "rtl" | "ltr" {
  for (const char of text) {
    if (isRtlChar(char)) return "rtl";
    if (/[A-Za-z]/.test(char)) return "ltr";
  }
  return "ltr";
}

/** Wrap in first-strong isolates so neighbors do not reorder around it. */
export function bidiIsolate(text: string): string {
  return `⁨${text}⁩`;
}

export function dirAttribute(text: string): string {
  return textDirection(text) === "rtl" ? ' dir="rtl"' : "";
}
