// String renderers share these two helpers: escaping for anything
// user-authored, and a percent formatter that rounds only for display.

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

export function percent(fraction: number): string {
  return `${Math.round(fraction * 1000) / 10}%`;
}

export function errorBanner(message: string): string {
  return `<div class="error-banner" role="alert">${escapeHtml(message)}</div>`;
}
