// Save the compiled bytes through a temporary object URL; the Uint8Array is
// wrapped, never copied or transformed, so the download matches the service
// response byte for byte.

export const DEFAULT_FILENAME = "0001.mid";

export function saveBytes(bytes: Uint8Array, filename: string = DEFAULT_FILENAME): void {
  const blob = new Blob([bytes as BlobPart], { type: "audio/midi" });
  const url = URL.createObjectURL(blob);
  const link = document.createElement("a");
  link.href = url;
  link.download = filename;
  document.body.appendChild(link);
  link.click();
  document.body.removeChild(link);
  URL.revokeObjectURL(url);
}
