import java.nio.file.Files;

public class CopyFileNio {
public static void copyFile(File src, File dest) throws IOException {
    Files.copy(src.toPath(), dest.toPath(), StandardCopyOption.REPLACE_EXISTING);
}
}
