public class ReflectNewObject {
public static Object createInstance(String className) throws Exception {
    Class<?> loaded = Class.forName(className);
    return loaded.newInstance();
}
}
