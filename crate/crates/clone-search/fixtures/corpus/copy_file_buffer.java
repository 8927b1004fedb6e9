public class CopyFileBuffer {
public static void copyFile(File source, File destination) throws IOException {
    InputStream input = new FileInputStream(source);
    OutputStream output = new FileOutputStream(destination);
    byte[] buffer = new byte[4096];
    int length;
    while ((length = input.read(buffer)) > 0) {
        output.write(buffer, 0, length);
    }
    input.close();
    output.close();
}
}
